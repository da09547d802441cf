#include "ringlab/matred.hpp"

namespace ringlab {

IdealClosure content_ideal(const FiniteRingPtr& ring, const Matrix<FiniteRing::Index>& A) {
  const auto kind = ring->spec().kind();
  if (kind == RingKind::MatrixRing || kind == RingKind::UpperTriangular) {
    throw UnsupportedRing("content ideals over " + ring->name() + " would be matrices of matrices");
  }
  return ideal_closure(ring, Side::TwoSided, A.data());
}

bool check_total_divisor(const FiniteRingPtr& ring, FiniteRing::Index d1, FiniteRing::Index d2) {
  const auto outer = ideal_closure(ring, Side::TwoSided, {d2});
  const auto right = ideal_closure(ring, Side::Right, {d1});
  const auto left = ideal_closure(ring, Side::Left, {d1});
  return outer.members.subset_of(right.members) && outer.members.subset_of(left.members);
}

}  // namespace ringlab
