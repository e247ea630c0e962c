#include "srcalg/graded.hpp"

#include <algorithm>

#include "srcalg/error.hpp"
#include "srcalg/srcsolve.hpp"

namespace srcalg::graded {

using coeff::BigInt;
using coeff::Coefficient;
using coeff::CoeffRing;

SignGradedElement::SignGradedElement(Quad s, Quad x) : s_(std::move(s)), x_(std::move(x)) {
  if (!coeff::ideal_membership_I(x_)) fail(ErrorCode::InvalidArgument, "odd part " + x_.to_string() + " is outside I");
}

std::string SignGradedElement::to_string() const { return "(" + s_.to_string() + ", " + x_.to_string() + ")"; }

Quad odd_pairing(const Quad& x, const Quad& y) { return coeff::quad_div_exact(x * y, Quad(2, -1)); }

SignGradedElement sign_graded_mul(const SignGradedElement& u, const SignGradedElement& v) {
  return {u.even() * v.even() + odd_pairing(u.odd(), v.odd()), u.odd() * v.even() + u.even() * v.odd()};
}

std::vector<BigInt> lattice_coordinates(const SignGradedElement& u) {
  const Quad& x = u.odd();
  return {u.even().a, u.even().b, BigInt((x.a - x.b) / 3), x.b};
}

SignGradedElement from_lattice_coordinates(const std::vector<BigInt>& c) {
  if (c.size() != 4) fail(ErrorCode::InvalidArgument, "expected four lattice coordinates");
  return {Quad(c[0], c[1]), Quad(BigInt(3 * c[2] + c[3]), c[3])};
}

namespace {

// Fraction-free elimination; exact for integer matrices.
BigInt bareiss_det(std::vector<std::vector<BigInt>> A) {
  const std::size_t n = A.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && A[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(A[k], A[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
      }
    }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

const std::vector<SignGradedElement>& lattice_basis() {
  static const std::vector<SignGradedElement> basis{
      {Quad(1, 0), Quad(0, 0)}, {Quad(0, 1), Quad(0, 0)}, {Quad(0, 0), Quad(3, 0)}, {Quad(0, 0), Quad(1, 1)}};
  return basis;
}

}  // namespace

BigInt left_multiplication_det(const SignGradedElement& u) {
  std::vector<std::vector<BigInt>> M(4, std::vector<BigInt>(4));
  const auto& basis = lattice_basis();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto c = lattice_coordinates(sign_graded_mul(u, basis[k]));
    for (std::size_t i = 0; i < 4; ++i) M[i][k] = c[i];
  }
  return bareiss_det(std::move(M));
}

namespace {

void test_unit(UnitSearchReport& rep, const SignGradedElement& u) {
  ++rep.candidates;
  const BigInt det = left_multiplication_det(u);
  if (det == 1 || det == -1) rep.units.push_back(u);
}

}  // namespace

UnitSearchReport unit_search(long bound) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "negative search bound");
  UnitSearchReport rep;
  rep.bound = bound;
  rep.homogeneous = true;
  const Quad zero(0, 0);
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      const Quad q(a, b);
      if (q.is_zero()) continue;
      test_unit(rep, SignGradedElement(q, zero));
      if (coeff::ideal_membership_I(q)) test_unit(rep, SignGradedElement(zero, q));
    }
  }
  std::sort(rep.units.begin(), rep.units.end(), [](const SignGradedElement& u, const SignGradedElement& v) {
    return lattice_coordinates(u) < lattice_coordinates(v);
  });
  return rep;
}

UnitSearchReport unit_search_full(long bound) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "negative search bound");
  UnitSearchReport rep;
  rep.bound = bound;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
          const Quad x(c, d);
          if (coeff::ideal_membership_I(x)) test_unit(rep, SignGradedElement(Quad(a, b), x));
        }
      }
    }
  }
  return rep;
}

WitnessReport strongly_graded_check(const RingDescriptor& ring, const groups::GroupElement& g) {
  WitnessReport rep{Fixture::GroupRing, g.to_string(), true, false, {}, ""};
  const GRElement u = GRElement::delta(ring, g);
  const GRElement v = GRElement::delta(ring, ring.group->inv(g));
  rep.pairs.emplace_back(u.to_string(), v.to_string());
  rep.verified = u * v == GRElement::one(ring);
  return rep;
}

WitnessReport strongly_graded_check_sign(int g) {
  if (g != 1 && g != -1) fail(ErrorCode::InvalidArgument, "sign grading has degrees +1 and -1 only");
  WitnessReport rep{Fixture::SignGraded, g == 1 ? "+1" : "-1", true, false, {}, ""};
  std::vector<std::pair<SignGradedElement, SignGradedElement>> pairs;
  if (g == 1) {
    pairs.emplace_back(SignGradedElement::one(), SignGradedElement::one());
  } else {
    const Quad zero(0, 0);
    pairs.emplace_back(SignGradedElement(zero, Quad(3, 0)), SignGradedElement(zero, Quad(2, -1)));
    pairs.emplace_back(SignGradedElement(zero, Quad(1, 1)), SignGradedElement(zero, Quad(1, 1)));
  }
  SignGradedElement sum(Quad(0, 0), Quad(0, 0));
  for (const auto& [u, v] : pairs) {
    rep.pairs.emplace_back(u.to_string(), v.to_string());
    sum = sum + sign_graded_mul(u, v);
  }
  rep.verified = sum == SignGradedElement::one();
  return rep;
}

WitnessReport strongly_graded_check_poly(long k) {
  WitnessReport rep{Fixture::IntConstPoly, std::to_string(k), false, false, {}, ""};
  if (k == 0) {
    rep.found = true;
    rep.pairs.emplace_back("1", "1");
    rep.verified = true;
    return rep;
  }
  rep.reason = "the component of degree " + std::to_string(k > 0 ? -k : k) + " is zero";
  return rep;
}

NzdReport homog_nzd_check(const GRElement& r, unsigned radius) {
  if (r.is_zero()) fail(ErrorCode::InvalidArgument, "zero is a zero divisor");
  srcsolve::LinearSystem sys{r.ring(), 1, 1, {{r}}};
  const auto tk = srcsolve::truncated_kernel(sys, radius);
  NzdReport rep;
  rep.radius = radius;
  rep.cols = tk.cols;
  rep.rank = tk.rank;
  rep.injective = tk.kernel.empty();
  for (const auto& v : tk.kernel) rep.kernel.push_back(v[0]);
  return rep;
}

bool is_integer_constant(const GRElement& c) {
  if (c.is_zero()) return true;
  if (c.size() != 1) return false;
  const auto& [g, v] = *c.terms().begin();
  if (!(g == c.ring().group->identity())) return false;
  if (v.ring().kind() == coeff::RingKind::Rational) return v.as_rational().get_den() == 1;
  return v.ring().kind() != coeff::RingKind::Quad || v.as_quad().b == 0;
}

IntConstPoly::IntConstPoly(RingDescriptor base, std::vector<GRElement> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.ring() == base_)) fail(ErrorCode::MixedRings, c.ring().describe() + " vs " + base_.describe());
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (!coeffs_.empty() && !is_integer_constant(coeffs_[0])) {
    fail(ErrorCode::InvalidArgument, "constant term " + coeffs_[0].to_string() + " is not an integer");
  }
}

IntConstPoly IntConstPoly::operator+(const IntConstPoly& o) const {
  std::vector<GRElement> out(std::max(coeffs_.size(), o.coeffs_.size()), GRElement::zero(base_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
  return IntConstPoly(base_, std::move(out));
}

IntConstPoly IntConstPoly::operator*(const IntConstPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return IntConstPoly(base_, {});
  std::vector<GRElement> out(coeffs_.size() + o.coeffs_.size() - 1, GRElement::zero(base_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return IntConstPoly(base_, std::move(out));
}

bool PolyKernelReport::trivial() const {
  for (auto k : kernel_by_degree) {
    if (k != 0) return false;
  }
  return true;
}

PolyKernelReport int_poly_system_kernel(unsigned max_degree, unsigned radius) {
  const RingDescriptor base{groups::Group::free(2), CoeffRing::integers()};
  const auto& G = base.group;
  const GRElement one = GRElement::one(base);
  const GRElement a = GRElement::delta(base, G->generators()[0]);
  const GRElement b = GRElement::delta(base, G->generators()[1]);
  // Degree k+1 of the product only sees the degree k coefficients of the
  // unknowns, so the map is block diagonal by degree.
  const srcsolve::LinearSystem sys{base, 1, 2, {{a - one, b - one}}};
  PolyKernelReport rep;
  rep.max_degree = max_degree;
  rep.radius = radius;
  for (unsigned k = 0; k <= max_degree; ++k) {
    const groups::FiniteSubset F = k == 0 ? groups::ball(G, 0) : groups::ball(G, radius);
    const auto L = srcsolve::lift_system(sys, F);
    const std::size_t r = linalg::rank(L.matrix);
    rep.rows += L.matrix.rows();
    rep.cols += L.matrix.cols();
    rep.rank += r;
    rep.kernel_by_degree.push_back(L.matrix.cols() - r);
  }
  return rep;
}

}  // namespace srcalg::graded
