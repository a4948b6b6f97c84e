#pragma once

#include <string>
#include <vector>

#include "chebsqrt/rational_function.hpp"

namespace chebsqrt {

/// Which map is iterated from the constant 1:
///   VStep          V <- (1 - z + V) / (1 + V)
///   Newton(p)      F <- ((p - 1) F + (1 - z) / F^(p-1)) / p
///   Halley(p)      G <- G ((p - 1) G^p + (p + 1)(1 - z)) / ((p + 1) G^p + (p - 1)(1 - z))
struct IterationScheme {
  enum class Kind { VStep, Newton, Halley };

  Kind kind = Kind::VStep;
  int p = 2;

  static IterationScheme v_step() { return {Kind::VStep, 2}; }
  /// Throws Error{BadRootOrder} when p < 2.
  static IterationScheme newton(int p = 2);
  static IterationScheme halley(int p = 2);

  /// "v", "newton" or "halley".
  std::string name() const;

  friend bool operator==(const IterationScheme&, const IterationScheme&) = default;
};

/// Parses "v", "newton" or "halley" (case-sensitive). Throws Error{ParseError}.
IterationScheme parse_scheme(const std::string& name, int p = 2);

struct IterationCaps {
  unsigned max_v_steps = 4096;
  unsigned max_newton_k = 12;
  unsigned max_halley_k = 12;
  unsigned max_coeff_index = 4096;
};

RationalFunction v_step(const RationalFunction& f);
RationalFunction newton_step(const RationalFunction& f, int p);
RationalFunction halley_step(const RationalFunction& f, int p);

/// k-fold application from the constant 1. Throws Error{CapExceeded} beyond caps.
RationalFunction iterate(const IterationScheme& scheme, unsigned k, const IterationCaps& caps = {});

/// V_0 .. V_n in one sweep.
std::vector<RationalFunction> v_sequence(unsigned n, const IterationCaps& caps = {});

/// For p = 2: index n with F_k = V_n (2^k - 1) or G_k = V_n (3^k - 1); k itself for VStep.
unsigned long equivalent_v_index(const IterationScheme& scheme, unsigned k);

}  // namespace chebsqrt
