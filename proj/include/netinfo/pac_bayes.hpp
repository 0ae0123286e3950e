#ifndef NETINFO_PAC_BAYES_HPP
#define NETINFO_PAC_BAYES_HPP

#include "netinfo/errors.hpp"
#include "netinfo/kernel.hpp"

// Realisable PAC-Bayes generalisation certificates from information
// content, and the classic symmetry-counting information bound for MLPs.

namespace netinfo {

struct GeneralisationBound {
  long n = 0;
  double delta = 0.01;
  double info_nats = 0.0;
  double raw_bound = 0.0;    // (info + ln(2n/delta)) / (n - 1)
  double error_bound = 0.0;  // 1 - e^{-raw}, clipped to [0, 1]
  bool vacuous = false;      // error_bound >= 0.5
};

// Average version-space test error is at most ln 1/(1-eps) <= raw_bound
// for a 1-delta proportion of training sets; the tightened headline form
// is error_bound = 1 - e^{-raw_bound}.
GeneralisationBound realisable_bound(double info_nats, long n, double delta);

// ln2 * w * sum_l d_l d_{l-1} - sum_{l<L} ln(d_l!), with exact
// log-factorials via lgamma (naive factorials overflow for widths ~1e4).
double symmetry_info_bound(const ArchSpec& arch);

}  // namespace netinfo

#endif  // NETINFO_PAC_BAYES_HPP
