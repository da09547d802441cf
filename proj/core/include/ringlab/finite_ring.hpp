#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/element_set.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

namespace detail {
class Structure;
struct Tables;
}  // namespace detail

/// Realized arithmetic of a finite (possibly noncommutative) ring.
///
/// Elements are dense indices in [0, size()). Zero is always index 0. The
/// index of a composite element is the mixed-radix number of its component
/// indices, least significant first: a k x k matrix is read row-major, so
/// in M2(Z/2) the unit E11 has index 1, E12 index 2, E21 index 4 and the
/// identity index 9.
///
/// Units, idempotents, the radical and every principal one- and two-sided
/// ideal are memoized on first request. Ideals are interned: two ideals of
/// any side with the same member set share an IdealId, so RaR = bR = Rb is
/// an id comparison. All const member functions are safe to call
/// concurrently.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
 public:
  using Index = std::uint32_t;
  using IdealId = std::uint32_t;

  /// Throws DomainError for infinite specs or specs above the cap.
  static std::shared_ptr<const FiniteRing> make(
      const RingSpec& spec, std::uint64_t max_cardinality = default_max_cardinality());
  static std::shared_ptr<const FiniteRing> make(std::string_view spec_text);

  ~FiniteRing();
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  const RingSpec& spec() const noexcept { return spec_; }
  /// Spec text, with "^op" appended for an opposite ring.
  std::string name() const;
  Index size() const noexcept { return size_; }
  Index zero() const noexcept { return 0; }
  Index one() const noexcept { return one_; }

  Index add(Index a, Index b) const;
  Index neg(Index a) const;
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index mul(Index a, Index b) const;

  bool is_commutative() const;
  bool is_opposite() const noexcept { return opposite_; }
  /// Same elements, multiplication reversed. Left-sided questions about R
  /// are right-sided questions about the opposite ring.
  std::shared_ptr<const FiniteRing> opposite() const;

  nlohmann::json to_json(Index a) const;
  Index from_json(const nlohmann::json& j) const;
  std::string to_string(Index a) const { return to_json(a).dump(); }

  // ---- units, idempotents, radical (memoized)
  bool is_unit(Index a) const;
  /// Two-sided inverse, if any.
  std::optional<Index> inverse(Index a) const;
  const std::vector<Index>& units() const;
  const std::vector<Index>& idempotents() const;
  /// { x : 1 - r x is a unit for every r }.
  const std::vector<Index>& jacobson_radical() const;

  // ---- interned ideals
  IdealId right_ideal(Index a) const;      // aR
  IdealId left_ideal(Index a) const;       // Ra
  IdealId two_sided_ideal(Index a) const;  // RaR
  IdealId ideal_sum(IdealId i, IdealId j) const;
  IdealId ideal_intersection(IdealId i, IdealId j) const;
  IdealId whole() const;
  IdealId zero_ideal() const;
  const ElementSet& members(IdealId id) const;
  const std::vector<Index>& member_list(IdealId id) const;
  std::size_t ideal_size(IdealId id) const { return member_list(id).size(); }
  bool contains(IdealId id, Index a) const { return members(id).test(a); }
  bool is_subset(IdealId a, IdealId b) const { return members(a).subset_of(members(b)); }
  /// Interns an arbitrary member set (the caller vouches it is an ideal).
  IdealId intern(ElementSet members) const;

  /// First x with xR = I, if I is a principal right ideal.
  std::optional<Index> right_generator(IdealId id) const;

 private:
  FiniteRing() = default;
  void ensure_principal() const;

  RingSpec spec_;
  Index size_ = 0;
  Index one_ = 0;
  bool opposite_ = false;
  std::shared_ptr<const detail::Structure> structure_;
  std::shared_ptr<const detail::Tables> tables_;

  mutable std::once_flag commutative_once_, units_once_, idempotents_once_, radical_once_,
      principal_once_, opposite_once_;
  mutable bool commutative_ = false;
  mutable std::vector<Index> inverse_;  // size_ means "no inverse"
  mutable std::vector<Index> units_, idempotents_, radical_;
  mutable std::vector<IdealId> right_, left_, two_sided_;
  mutable std::unordered_map<IdealId, Index> right_generator_;
  mutable std::shared_ptr<const FiniteRing> opposite_ring_;

  struct IdealData {
    ElementSet bits;
    std::vector<Index> list;
  };
  mutable std::mutex ideal_mutex_;
  mutable std::deque<IdealData> ideals_;
  mutable std::unordered_map<ElementSet, IdealId, ElementSetHash> ideal_index_;
  mutable std::unordered_map<std::uint64_t, IdealId> sum_cache_;
};

using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace ringlab
