#include <fstream>
#include <sstream>

#include "spinlat/cli.hpp"
#include "spinlat/errors.hpp"

namespace spinlat::cli {

void Manifest::set(const std::string& key, const std::string& value) {
  require(key.find('=') == std::string::npos && key.find('\n') == std::string::npos,
          "manifest key may not contain '=' or newlines");
  require(value.find('\n') == std::string::npos, "manifest value may not contain newlines");
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

const std::string* Manifest::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Manifest::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

void Manifest::write(const std::string& path) const {
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::invalid_argument, "cannot write manifest " + path);
  file << str();
}

Manifest Manifest::parse(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::parse, "manifest line " + std::to_string(line_no) + " has no '='");
    }
    m.set(line.substr(0, eq), line.substr(eq + 1));
  }
  return m;
}

Manifest Manifest::read(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::invalid_argument, "cannot open manifest " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

std::vector<std::string> replay_args(const Manifest& manifest) {
  const std::string* command = manifest.find("command");
  if (command == nullptr) fail(ErrorKind::parse, "manifest has no 'command' entry");
  std::vector<std::string> args{*command};
  for (const auto& [key, value] : manifest.entries()) {
    if (key.starts_with("arg.")) {
      args.push_back(value);
    } else if (key.starts_with("opt.")) {
      const std::string flag = "--" + key.substr(4);
      if (value == "true") {
        args.push_back(flag);
      } else if (value != "false") {
        args.push_back(flag);
        args.push_back(value);
      }
    }
  }
  return args;
}

}  // namespace spinlat::cli
