#pragma once

#include <cstddef>

#include "loggas/errors.hpp"

namespace loggas::specfun {

// Truncation policy shared by all infinite sums/products in this module.
struct SeriesControl {
  double abs_tol = 1e-14;
  std::size_t max_terms = 10'000;

  void validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("SeriesControl.abs_tol must be > 0");
    if (max_terms < 1) throw DomainError("SeriesControl.max_terms must be >= 1");
  }
};

// Nome of the theta function, p in (0,1).  The annulus code uses p = q^2.
struct Nome {
  double p;

  explicit Nome(double p_) : p(p_) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("nome p must lie in (0,1)");
  }
};

}  // namespace loggas::specfun
