#pragma once

// Gate constructors: the parameterized single-qubit strategy gate, the
// two-qubit entangler exp(i g/2 X(x)X) with its CNOT decomposition, and the
// standard named gates. Every constructor validates unitarity before
// returning.

#include <numbers>
#include <string>
#include <string_view>

#include "qgames/qcore.hpp"

namespace qgames {

struct StrategyParams {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [-pi, pi]
  double psi = 0.0;    // [-pi, pi]
};

struct EntanglerParam {
  double gamma = 0.0;  // [0, pi/2]
};

namespace detail {

inline void validate(const StrategyParams& p) {
  constexpr double pi = std::numbers::pi;
  constexpr double eps = 1e-12;
  if (!(std::isfinite(p.theta) && std::isfinite(p.phi) && std::isfinite(p.psi)))
    throw std::domain_error("strategy parameters must be finite");
  if (p.theta < -eps || p.theta > pi + eps)
    throw std::domain_error("theta must be in [0, pi]");
  if (p.phi < -pi - eps || p.phi > pi + eps)
    throw std::domain_error("phi must be in [-pi, pi]");
  if (p.psi < -pi - eps || p.psi > pi + eps)
    throw std::domain_error("psi must be in [-pi, pi]");
}

inline void validate(const EntanglerParam& g) {
  constexpr double eps = 1e-12;
  if (!std::isfinite(g.gamma)) throw std::domain_error("gamma must be finite");
  if (g.gamma < -eps || g.gamma > std::numbers::pi / 2 + eps)
    throw std::domain_error("gamma must be in [0, pi/2]");
}

inline UnitaryMatrix checked(UnitaryMatrix m, double tol = kUnitaryTol) {
  if (!check_unitary(m, tol)) throw std::logic_error("constructed gate is not unitary");
  return m;
}

}  // namespace detail

// U(theta, phi, psi):
//   [ e^{-i phi} cos(theta/2)   i e^{i psi} sin(theta/2) ]
//   [ i e^{-i psi} sin(theta/2)   e^{i phi} cos(theta/2) ]
// At phi = psi = 0 this is the X-axis rotation exp(i theta X / 2), which
// commutes with the entangler; that commutation is what makes the game with
// zero phases reduce to a classical mixed-strategy game at every gamma.
inline UnitaryMatrix strategy_gate(const StrategyParams& p) {
  detail::validate(p);
  const double c = std::cos(p.theta / 2.0);
  const double s = std::sin(p.theta / 2.0);
  const cplx i{0.0, 1.0};
  UnitaryMatrix u = UnitaryMatrix::zero(2);
  u.at(0, 0) = std::exp(cplx{0.0, -p.phi}) * c;
  u.at(0, 1) = i * std::exp(cplx{0.0, p.psi}) * s;
  u.at(1, 0) = i * std::exp(cplx{0.0, -p.psi}) * s;
  u.at(1, 1) = std::exp(cplx{0.0, p.phi}) * c;
  return detail::checked(std::move(u));
}

inline UnitaryMatrix named_gate(std::string_view name) {
  const cplx i{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  UnitaryMatrix m;
  if (name == "I") {
    m = UnitaryMatrix::identity(2);
  } else if (name == "X") {
    m = UnitaryMatrix::zero(2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
  } else if (name == "Y") {
    m = UnitaryMatrix::zero(2);
    m.at(0, 1) = -i;
    m.at(1, 0) = i;
  } else if (name == "Z") {
    m = UnitaryMatrix::identity(2);
    m.at(1, 1) = -1.0;
  } else if (name == "H") {
    m = UnitaryMatrix::zero(2);
    m.at(0, 0) = r;
    m.at(0, 1) = r;
    m.at(1, 0) = r;
    m.at(1, 1) = -r;
  } else if (name == "CNOT") {
    // control = qubit 1 (most significant of the pair)
    m = UnitaryMatrix::zero(4);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 3) = 1.0;
    m.at(3, 2) = 1.0;
  } else if (name == "SWAP") {
    m = UnitaryMatrix::zero(4);
    m.at(0, 0) = 1.0;
    m.at(1, 2) = 1.0;
    m.at(2, 1) = 1.0;
    m.at(3, 3) = 1.0;
  } else {
    throw std::out_of_range("unknown gate name: " + std::string(name));
  }
  return detail::checked(std::move(m));
}

// J(gamma) = exp(i gamma/2 X(x)X) = cos(gamma/2) I4 + i sin(gamma/2) X(x)X
inline UnitaryMatrix entangler(EntanglerParam g) {
  detail::validate(g);
  const double c = std::cos(g.gamma / 2.0);
  const cplx is{0.0, std::sin(g.gamma / 2.0)};
  UnitaryMatrix j = UnitaryMatrix::zero(4);
  for (int k = 0; k < 4; ++k) {
    j.at(k, k) = c;
    j.at(k, 3 - k) = is;  // X(x)X reverses the 2-qubit basis
  }
  return detail::checked(std::move(j));
}

// CNOT . (exp(i gamma X / 2) (x) I) . CNOT, CNOT controlled on qubit 1
inline UnitaryMatrix entangler_decomposed(EntanglerParam g) {
  detail::validate(g);
  UnitaryMatrix rx = UnitaryMatrix::zero(2);
  rx.at(0, 0) = std::cos(g.gamma / 2.0);
  rx.at(1, 1) = std::cos(g.gamma / 2.0);
  rx.at(0, 1) = cplx{0.0, std::sin(g.gamma / 2.0)};
  rx.at(1, 0) = cplx{0.0, std::sin(g.gamma / 2.0)};
  UnitaryMatrix cnot = named_gate("CNOT");
  UnitaryMatrix mid = tensor_product(rx, UnitaryMatrix::identity(2));
  return detail::checked(multiply(cnot, multiply(mid, cnot)));
}

}  // namespace qgames
