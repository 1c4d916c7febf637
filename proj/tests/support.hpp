#pragma once

// Shared fixtures: the embedded catalog and small curve constructors.

#include <doctest.h>

#include <random>

#include "cubtors/harness.hpp"

namespace testing_support {

using namespace cubtors;

inline const harness::Catalog& catalog() {
  static const harness::Catalog cat = harness::load_default_manifest();
  return cat;
}

inline FieldRef field(const std::string& label) { return catalog().field(label).field; }

inline QCurve qcurve(long a1, long a2, long a3, long a4, long a6) {
  return QCurve(RationalsTag{}, {Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)});
}

inline QPoly qpoly(const std::vector<long>& c) { return QPoly::from_ints(RationalsTag{}, c); }

/// Random curve over a finite field; retries until nonsingular.
inline FFCurve random_ff_curve(const FFRef& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f->size() - 1));
  while (true) {
    std::array<FFElement, 5> a{f->element(pick(rng)), f->element(pick(rng)), f->element(pick(rng)),
                               f->element(pick(rng)), f->element(pick(rng))};
    try {
      return FFCurve(f, a);
    } catch (const SingularCurve&) {
    }
  }
}

}  // namespace testing_support
