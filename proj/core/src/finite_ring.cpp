#include "ringlab/finite_ring.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"

namespace ringlab {

using Index = FiniteRing::Index;
using IdealId = FiniteRing::IdealId;
using nlohmann::json;

namespace detail {

class Structure {
 public:
  virtual ~Structure() = default;
  virtual Index size() const = 0;
  virtual Index one() const = 0;
  virtual Index add(Index a, Index b) const = 0;
  virtual Index neg(Index a) const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual json to_json(Index a) const = 0;
  virtual Index from_json(const json& j) const = 0;
};

struct Tables {
  Index n = 0;
  std::vector<Index> add, mul, neg;
};

}  // namespace detail

namespace {

// Rings at or below this size get dense add/mul tables.
constexpr Index kTableLimit = 1024;

long long json_int(const json& j) {
  if (!j.is_number_integer()) throw SyntaxError("expected an integer, got " + j.dump());
  return j.get<long long>();
}

class ResidueStructure final : public detail::Structure {
 public:
  explicit ResidueStructure(Index n) : n_(n) {}
  Index size() const override { return n_; }
  Index one() const override { return 1 % n_; }
  Index add(Index a, Index b) const override {
    return static_cast<Index>((std::uint64_t{a} + b) % n_);
  }
  Index neg(Index a) const override { return a == 0 ? 0 : n_ - a; }
  Index mul(Index a, Index b) const override {
    return static_cast<Index>((std::uint64_t{a} * b) % n_);
  }
  json to_json(Index a) const override { return a; }
  Index from_json(const json& j) const override {
    long long v = json_int(j) % static_cast<long long>(n_);
    if (v < 0) v += n_;
    return static_cast<Index>(v);
  }

 private:
  Index n_;
};

class PolyQuotientStructure final : public detail::Structure {
 public:
  explicit PolyQuotientStructure(Poly modulus) : f_(std::move(modulus)) {
    n_ = 1;
    for (int i = 0; i < f_.degree(); ++i) n_ *= f_.modulus();
  }
  Index size() const override { return n_; }
  Index one() const override { return 1; }
  Index add(Index a, Index b) const override { return encode(decode(a) + decode(b)); }
  Index neg(Index a) const override { return encode(-decode(a)); }
  Index mul(Index a, Index b) const override {
    return encode(divmod(decode(a) * decode(b), f_).second);
  }
  json to_json(Index a) const override {
    auto arr = json::array();
    for (auto c : decode(a).coeffs()) arr.push_back(c);
    return arr;
  }
  Index from_json(const json& j) const override {
    std::vector<long long> c;
    if (j.is_array()) {
      for (const auto& v : j) c.push_back(json_int(v));
    } else {
      c.push_back(json_int(j));
    }
    return encode(divmod(Poly::from_signed(f_.modulus(), c), f_).second);
  }

 private:
  Poly decode(Index a) const { return Poly::from_index(f_.modulus(), a); }
  static Index encode(const Poly& q) { return static_cast<Index>(q.index()); }

  Poly f_;
  Index n_ = 1;
};

// Shared digit plumbing for matrix-like and product rings.
class Composite : public detail::Structure {
 protected:
  std::vector<Index> digits(Index a, const std::vector<Index>& radix) const {
    std::vector<Index> d(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      d[i] = a % radix[i];
      a /= radix[i];
    }
    return d;
  }
  static Index undigits(const std::vector<Index>& d, const std::vector<Index>& radix) {
    Index a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * radix[i] + d[i];
    return a;
  }
};

// M_k(base) when `triangular` is false; UT_k(base) otherwise. Stored
// positions are the (i, j) pairs with j >= i for UT, all pairs for M, both
// in row-major order.
class MatrixStructure final : public Composite {
 public:
  MatrixStructure(Index k, FiniteRingPtr base, bool triangular)
      : k_(k), base_(std::move(base)), triangular_(triangular) {
    slot_.assign(static_cast<std::size_t>(k_) * k_, -1);
    for (Index i = 0; i < k_; ++i) {
      for (Index j = 0; j < k_; ++j) {
        if (!triangular_ || j >= i) {
          slot_[i * k_ + j] = static_cast<int>(radix_.size());
          radix_.push_back(base_->size());
        }
      }
    }
    n_ = 1;
    for (auto r : radix_) n_ *= r;
    std::vector<Index> id(radix_.size(), 0);
    for (Index i = 0; i < k_; ++i) id[static_cast<std::size_t>(slot_[i * k_ + i])] = base_->one();
    one_ = undigits(id, radix_);
  }

  Index size() const override { return n_; }
  Index one() const override { return one_; }
  Index add(Index a, Index b) const override {
    auto x = digits(a, radix_), y = digits(b, radix_);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add(x[i], y[i]);
    return undigits(x, radix_);
  }
  Index neg(Index a) const override {
    auto x = digits(a, radix_);
    for (auto& v : x) v = base_->neg(v);
    return undigits(x, radix_);
  }
  Index mul(Index a, Index b) const override {
    auto x = full(a), y = full(b);
    std::vector<Index> z(static_cast<std::size_t>(k_) * k_, 0);
    for (Index i = 0; i < k_; ++i) {
      for (Index j = 0; j < k_; ++j) {
        Index acc = 0;
        for (Index l = 0; l < k_; ++l) {
          acc = base_->add(acc, base_->mul(x[i * k_ + l], y[l * k_ + j]));
        }
        z[i * k_ + j] = acc;
      }
    }
    return pack(z);
  }
  json to_json(Index a) const override {
    auto m = full(a);
    auto rows = json::array();
    for (Index i = 0; i < k_; ++i) {
      auto row = json::array();
      for (Index j = 0; j < k_; ++j) row.push_back(base_->to_json(m[i * k_ + j]));
      rows.push_back(row);
    }
    return rows;
  }
  Index from_json(const json& j) const override {
    if (!j.is_array() || j.size() != k_) {
      throw SyntaxError("expected " + std::to_string(k_) + " matrix rows, got " + j.dump());
    }
    std::vector<Index> m(static_cast<std::size_t>(k_) * k_, 0);
    for (Index i = 0; i < k_; ++i) {
      if (!j[i].is_array() || j[i].size() != k_) {
        throw SyntaxError("expected a row of " + std::to_string(k_) + " entries, got " +
                          j[i].dump());
      }
      for (Index c = 0; c < k_; ++c) {
        m[i * k_ + c] = base_->from_json(j[i][c]);
        if (triangular_ && c < i && m[i * k_ + c] != 0) {
          throw DomainError("upper-triangular element has a nonzero entry below the diagonal");
        }
      }
    }
    return pack(m);
  }

 private:
  std::vector<Index> full(Index a) const {
    auto d = digits(a, radix_);
    std::vector<Index> m(slot_.size(), 0);
    for (std::size_t s = 0; s < slot_.size(); ++s) {
      if (slot_[s] >= 0) m[s] = d[static_cast<std::size_t>(slot_[s])];
    }
    return m;
  }
  Index pack(const std::vector<Index>& m) const {
    std::vector<Index> d(radix_.size());
    for (std::size_t s = 0; s < slot_.size(); ++s) {
      if (slot_[s] >= 0) d[static_cast<std::size_t>(slot_[s])] = m[s];
    }
    return undigits(d, radix_);
  }

  Index k_;
  FiniteRingPtr base_;
  bool triangular_;
  std::vector<int> slot_;
  std::vector<Index> radix_;
  Index n_ = 1, one_ = 0;
};

class ProductStructure final : public Composite {
 public:
  explicit ProductStructure(std::vector<FiniteRingPtr> parts) : parts_(std::move(parts)) {
    std::vector<Index> id;
    for (const auto& p : parts_) {
      radix_.push_back(p->size());
      id.push_back(p->one());
    }
    n_ = 1;
    for (auto r : radix_) n_ *= r;
    one_ = undigits(id, radix_);
  }
  Index size() const override { return n_; }
  Index one() const override { return one_; }
  Index add(Index a, Index b) const override {
    auto x = digits(a, radix_), y = digits(b, radix_);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->add(x[i], y[i]);
    return undigits(x, radix_);
  }
  Index neg(Index a) const override {
    auto x = digits(a, radix_);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->neg(x[i]);
    return undigits(x, radix_);
  }
  Index mul(Index a, Index b) const override {
    auto x = digits(a, radix_), y = digits(b, radix_);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->mul(x[i], y[i]);
    return undigits(x, radix_);
  }
  json to_json(Index a) const override {
    auto x = digits(a, radix_);
    auto arr = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) arr.push_back(parts_[i]->to_json(x[i]));
    return arr;
  }
  Index from_json(const json& j) const override {
    if (!j.is_array() || j.size() != parts_.size()) {
      throw SyntaxError("expected a tuple of " + std::to_string(parts_.size()) +
                        " components, got " + j.dump());
    }
    std::vector<Index> x(parts_.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = parts_[i]->from_json(j[i]);
    return undigits(x, radix_);
  }

 private:
  std::vector<FiniteRingPtr> parts_;
  std::vector<Index> radix_;
  Index n_ = 1, one_ = 0;
};

std::shared_ptr<const detail::Structure> build_structure(const RingSpec& spec,
                                                         std::uint64_t cap) {
  switch (spec.kind()) {
    case RingKind::Residue:
      return std::make_shared<ResidueStructure>(static_cast<Index>(spec.param()));
    case RingKind::PolyQuotient:
      return std::make_shared<PolyQuotientStructure>(spec.modulus());
    case RingKind::MatrixRing:
    case RingKind::UpperTriangular:
      return std::make_shared<MatrixStructure>(static_cast<Index>(spec.param()),
                                               FiniteRing::make(spec.children()[0], cap),
                                               spec.kind() == RingKind::UpperTriangular);
    case RingKind::Product: {
      std::vector<FiniteRingPtr> parts;
      for (const auto& c : spec.children()) parts.push_back(FiniteRing::make(c, cap));
      return std::make_shared<ProductStructure>(std::move(parts));
    }
    default:
      throw DomainError(spec.to_string() + " is not a finite ring");
  }
}

}  // namespace

FiniteRing::~FiniteRing() = default;

FiniteRingPtr FiniteRing::make(const RingSpec& spec, std::uint64_t max_cardinality) {
  if (!spec.is_finite()) throw DomainError(spec.to_string() + " is not a finite ring");
  spec.check_cardinality(max_cardinality);
  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->spec_ = spec;
  r->structure_ = build_structure(spec, max_cardinality);
  r->size_ = r->structure_->size();
  r->one_ = r->structure_->one();
  if (r->size_ <= kTableLimit) {
    auto t = std::make_shared<detail::Tables>();
    const auto n = r->size_;
    t->n = n;
    t->add.resize(std::size_t{n} * n);
    t->mul.resize(std::size_t{n} * n);
    t->neg.resize(n);
    for (Index a = 0; a < n; ++a) {
      t->neg[a] = r->structure_->neg(a);
      for (Index b = 0; b < n; ++b) {
        t->add[std::size_t{a} * n + b] = r->structure_->add(a, b);
        t->mul[std::size_t{a} * n + b] = r->structure_->mul(a, b);
      }
    }
    r->tables_ = std::move(t);
  }
  return r;
}

FiniteRingPtr FiniteRing::make(std::string_view spec_text) {
  return make(parse_ring_spec(spec_text));
}

std::string FiniteRing::name() const { return spec_.to_string() + (opposite_ ? "^op" : ""); }

Index FiniteRing::add(Index a, Index b) const {
  if (tables_) return tables_->add[std::size_t{a} * size_ + b];
  return structure_->add(a, b);
}

Index FiniteRing::neg(Index a) const {
  if (tables_) return tables_->neg[a];
  return structure_->neg(a);
}

Index FiniteRing::mul(Index a, Index b) const {
  if (opposite_) std::swap(a, b);
  if (tables_) return tables_->mul[std::size_t{a} * size_ + b];
  return structure_->mul(a, b);
}

bool FiniteRing::is_commutative() const {
  std::call_once(commutative_once_, [this] {
    commutative_ = true;
    for (Index a = 0; a < size_ && commutative_; ++a) {
      for (Index b = a + 1; b < size_; ++b) {
        if (mul(a, b) != mul(b, a)) {
          commutative_ = false;
          break;
        }
      }
    }
  });
  return commutative_;
}

FiniteRingPtr FiniteRing::opposite() const {
  std::call_once(opposite_once_, [this] {
    std::shared_ptr<FiniteRing> r(new FiniteRing());
    r->spec_ = spec_;
    r->size_ = size_;
    r->one_ = one_;
    r->opposite_ = !opposite_;
    r->structure_ = structure_;
    r->tables_ = tables_;
    opposite_ring_ = std::move(r);
  });
  return opposite_ring_;
}

json FiniteRing::to_json(Index a) const {
  if (a >= size_) throw DomainError("element index out of range for " + name());
  return structure_->to_json(a);
}

Index FiniteRing::from_json(const json& j) const { return structure_->from_json(j); }

// ------------------------------------------------------------------ units

std::optional<Index> FiniteRing::inverse(Index a) const {
  units();
  if (inverse_[a] == size_) return std::nullopt;
  return inverse_[a];
}

bool FiniteRing::is_unit(Index a) const { return inverse(a).has_value(); }

const std::vector<Index>& FiniteRing::units() const {
  std::call_once(units_once_, [this] {
    inverse_.assign(size_, size_);
    for (Index a = 0; a < size_; ++a) {
      if (inverse_[a] != size_) continue;
      for (Index b = 0; b < size_; ++b) {
        if (mul(a, b) == one_ && mul(b, a) == one_) {
          inverse_[a] = b;
          inverse_[b] = a;
          break;
        }
      }
    }
    for (Index a = 0; a < size_; ++a) {
      if (inverse_[a] != size_) units_.push_back(a);
    }
  });
  return units_;
}

const std::vector<Index>& FiniteRing::idempotents() const {
  std::call_once(idempotents_once_, [this] {
    for (Index a = 0; a < size_; ++a) {
      if (mul(a, a) == a) idempotents_.push_back(a);
    }
  });
  return idempotents_;
}

const std::vector<Index>& FiniteRing::jacobson_radical() const {
  std::call_once(radical_once_, [this] {
    units();
    for (Index x = 0; x < size_; ++x) {
      bool in = true;
      for (Index r = 0; r < size_ && in; ++r) {
        in = inverse_[sub(one_, mul(r, x))] != size_;
      }
      if (in) radical_.push_back(x);
    }
  });
  return radical_;
}

// ----------------------------------------------------------------- ideals

IdealId FiniteRing::intern(ElementSet members) const {
  std::lock_guard lock(ideal_mutex_);
  auto it = ideal_index_.find(members);
  if (it != ideal_index_.end()) return it->second;
  const auto id = static_cast<IdealId>(ideals_.size());
  auto list = members.to_vector<Index>();
  ideal_index_.emplace(members, id);
  ideals_.push_back(IdealData{std::move(members), std::move(list)});
  return id;
}

const ElementSet& FiniteRing::members(IdealId id) const {
  std::lock_guard lock(ideal_mutex_);
  return ideals_.at(id).bits;
}

const std::vector<Index>& FiniteRing::member_list(IdealId id) const {
  std::lock_guard lock(ideal_mutex_);
  return ideals_.at(id).list;
}

IdealId FiniteRing::whole() const {
  ElementSet all(size_);
  for (Index a = 0; a < size_; ++a) all.set(a);
  return intern(std::move(all));
}

IdealId FiniteRing::zero_ideal() const {
  ElementSet z(size_);
  z.set(0);
  return intern(std::move(z));
}

IdealId FiniteRing::ideal_sum(IdealId i, IdealId j) const {
  if (i > j) std::swap(i, j);
  const std::uint64_t key = (std::uint64_t{i} << 32) | j;
  {
    std::lock_guard lock(ideal_mutex_);
    auto it = sum_cache_.find(key);
    if (it != sum_cache_.end()) return it->second;
  }
  const auto& a = member_list(i);
  const auto& b = member_list(j);
  ElementSet s = members(i);
  for (Index x : a) {
    for (Index y : b) s.set(add(x, y));
  }
  const auto id = intern(std::move(s));
  std::lock_guard lock(ideal_mutex_);
  sum_cache_.emplace(key, id);
  return id;
}

IdealId FiniteRing::ideal_intersection(IdealId i, IdealId j) const {
  ElementSet s = members(i);
  s &= members(j);
  return intern(std::move(s));
}

void FiniteRing::ensure_principal() const {
  std::call_once(principal_once_, [this] {
    right_.resize(size_);
    left_.resize(size_);
    two_sided_.resize(size_);
    for (Index a = 0; a < size_; ++a) {
      ElementSet r(size_), l(size_);
      for (Index x = 0; x < size_; ++x) {
        r.set(mul(a, x));
        l.set(mul(x, a));
      }
      right_[a] = intern(std::move(r));
      left_[a] = intern(std::move(l));
    }
    for (Index a = 0; a < size_; ++a) {
      right_generator_.try_emplace(right_[a], a);
    }
    // RaR is the sum of yR over y in Ra.
    for (Index a = 0; a < size_; ++a) {
      std::vector<IdealId> seen;
      IdealId acc = right_[0];
      for (Index y : member_list(left_[a])) {
        const auto rid = right_[y];
        if (std::find(seen.begin(), seen.end(), rid) != seen.end()) continue;
        seen.push_back(rid);
        acc = ideal_sum(acc, rid);
      }
      two_sided_[a] = acc;
    }
  });
}

IdealId FiniteRing::right_ideal(Index a) const {
  ensure_principal();
  return right_[a];
}

IdealId FiniteRing::left_ideal(Index a) const {
  ensure_principal();
  return left_[a];
}

IdealId FiniteRing::two_sided_ideal(Index a) const {
  ensure_principal();
  return two_sided_[a];
}

std::optional<Index> FiniteRing::right_generator(IdealId id) const {
  ensure_principal();
  auto it = right_generator_.find(id);
  if (it == right_generator_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ringlab
