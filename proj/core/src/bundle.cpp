#include "theta_lab/bundle.hpp"

#include <string>

#include "theta_lab/error.hpp"

namespace theta_lab {

BundleSymbol::BundleSymbol(long rank, long degree, long genus)
    : rank(rank), degree(degree), genus(genus) {
  if (rank < 1) fail(ErrorCode::kInvalidArgument, "bundle rank must be positive");
  if (genus < 0) fail(ErrorCode::kInvalidArgument, "genus must be nonnegative");
}

long chi(const BundleSymbol& b) { return b.degree + b.rank * (1 - b.genus); }

Rational slope(const BundleSymbol& b) { return Rational(b.degree) / Rational(b.rank); }

namespace {

void require_same_genus(const BundleSymbol& a, const BundleSymbol& b) {
  if (a.genus != b.genus) fail(ErrorCode::kInvalidArgument, "bundles live on curves of different genus");
}

}  // namespace

BundleSymbol tensor(const BundleSymbol& a, const BundleSymbol& b) {
  require_same_genus(a, b);
  return {a.rank * b.rank, a.rank * b.degree + b.rank * a.degree, a.genus};
}

BundleSymbol hom(const BundleSymbol& source, const BundleSymbol& target) {
  return tensor(dual(source), target);
}

BundleSymbol dual(const BundleSymbol& b) { return {b.rank, -b.degree, b.genus}; }

BundleSymbol det(const BundleSymbol& b) { return {1, b.degree, b.genus}; }

BundleSymbol sym2(const BundleSymbol& b) {
  return {b.rank * (b.rank + 1) / 2, b.degree * (b.rank + 1), b.genus};
}

BundleSymbol wedge2(const BundleSymbol& b) {
  if (b.rank < 2) fail(ErrorCode::kInvalidArgument, "wedge^2 of a line bundle is zero");
  return {b.rank * (b.rank - 1) / 2, b.degree * (b.rank - 1), b.genus};
}

BundleSymbol twist(const BundleSymbol& b, long line_degree) {
  return {b.rank, b.degree + b.rank * line_degree, b.genus};
}

bool stability_allows(const BundleSymbol& sub, const BundleSymbol& ambient) {
  if (sub.rank >= ambient.rank) {
    fail(ErrorCode::kInvalidArgument, "a proper subbundle needs smaller rank");
  }
  return slope(sub) < slope(ambient);
}

long moduli_dim(long n, long g) {
  if (n < 1 || g < 2) fail(ErrorCode::kInvalidArgument, "moduli_dim requires n >= 1, g >= 2");
  return n * (2 * n + 1) * (g - 1);
}

long theta_self_intersection(long k, long g) {
  long value = 1;
  for (long i = 1; i <= g; ++i) value *= k * i;
  return value;
}

RaynaudInvariants raynaud_invariants(long g) {
  if (g != 2) {
    fail(ErrorCode::kUnsupportedGenus,
         "Raynaud invariants are only defined here for g = 2, got " + std::to_string(g));
  }
  RaynaudInvariants out{};
  out.theta_self_int_2theta = theta_self_intersection(2, g);
  out.mukai_rank = out.theta_self_int_2theta / g;  // (2 Theta)^g / g, equal to / g! at g = 2
  out.duplication_degree = 1L << (2 * g);            // |J[2]| = 2^(2g)
  // (2 Theta . X) = 2g on the Abel-Jacobi curve, pulled back through multiplication by 2.
  out.pullback_degree_on_y = out.duplication_degree * 2 * g;
  out.slope_ec = Rational(out.pullback_degree_on_y) / Rational(out.duplication_degree) /
                 Rational(out.mukai_rank);
  return out;
}

}  // namespace theta_lab
