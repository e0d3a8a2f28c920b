#include <cmath>
#include <numbers>

#include "coxbound/coxeter_system.hpp"

namespace coxbound {

Eigen::MatrixXd cosine_form(const CoxeterSystem& sys) {
  const int n = sys.rank();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        b(i, j) = 1.0;
        continue;
      }
      Order m = sys.order(i, j);
      b(i, j) = m.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / m.value());
    }
  }
  return b;
}

// rho(s) v = v - 2 B(a_s, v) a_s, in the basis of simple roots.
std::vector<Eigen::MatrixXd> geometric_representation(const CoxeterSystem& sys) {
  const int n = sys.rank();
  const Eigen::MatrixXd b = cosine_form(sys);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    for (int j = 0; j < n; ++j) r(s, j) -= 2.0 * b(s, j);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coxbound
