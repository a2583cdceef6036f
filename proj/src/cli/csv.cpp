#include <cstdio>

#include "spinlat/cli.hpp"

namespace spinlat::cli {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string sweep_csv(const SweepTable& table) {
  std::string out = "b,gamma,e1,delta12,delta13,entropy_single,entropy_half";
  const std::size_t mz = table.rows.empty() ? 0 : table.rows.front().c_z.size();
  const std::size_t mr = table.rows.empty() ? 0 : table.rows.front().c_rho.size();
  for (std::size_t l = 1; l <= mz; ++l) out += ",c_z" + std::to_string(l);
  for (std::size_t l = 1; l <= mr; ++l) out += ",c_rho" + std::to_string(l);
  out += ",degeneracy_flag,ground_cluster\n";
  for (const auto& r : table.rows) {
    out += format_double(r.b) + ',' + format_double(r.gamma) + ',' + format_double(r.e1) + ',' +
           format_double(r.delta12) + ',' + format_double(r.delta13) + ',' +
           format_double(r.entropy_single) + ',' + format_double(r.entropy_half);
    for (double c : r.c_z) out += ',' + format_double(c);
    for (double c : r.c_rho) out += ',' + format_double(c);
    out += r.degeneracy_flag ? ",1," : ",0,";
    out += std::to_string(r.ground_cluster) + '\n';
  }
  return out;
}

}  // namespace spinlat::cli
