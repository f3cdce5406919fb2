#pragma once

// Exact commutative semirings: the built-in tropical semifields (B, Qmax,
// Zmax), the naturals, and finite semirings given by explicit operation
// tables.  Everything is validated eagerly and immutable afterwards.

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semicech {

using Rational = boost::multiprecision::cpp_rational;

/// Raised when two elements of different parent semirings meet in one
/// operation, or when an operation is asked of a semiring that cannot
/// support it.
struct IncompatibleOperands : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when construction-time axiom validation fails.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive computation would exceed its configured bound.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SemiringKind { Boolean, QMax, ZMax, Naturals, Table };

/// A finite commutative semiring presented by addition/multiplication tables
/// over element indices 0..size-1.  All semiring axioms are checked
/// exhaustively at construction; an invalid table never becomes a value.
class SemiringTable {
public:
    SemiringTable(int size, int zero, int one,
                  std::vector<std::vector<int>> add,
                  std::vector<std::vector<int>> mul)
        : size_(size), zero_(zero), one_(one),
          add_(std::move(add)), mul_(std::move(mul)) {
        validate();
    }

    int size() const { return size_; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }

    bool is_idempotent() const {
        for (int a = 0; a < size_; ++a)
            if (add_[a][a] != a) return false;
        return true;
    }

    /// x <= y in the canonical order iff x + y = y.
    bool leq(int a, int b) const { return add_[a][b] == b; }

    bool is_totally_ordered_idempotent() const {
        if (!is_idempotent()) return false;
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b)
                if (!leq(a, b) && !leq(b, a)) return false;
        return true;
    }

    /// Multiplicative inverse by exhaustive search.
    std::optional<int> inverse(int a) const {
        for (int b = 0; b < size_; ++b)
            if (mul_[a][b] == one_) return b;
        return std::nullopt;
    }

    /// The unit group {a : ab = 1 for some b} together with the inverse map.
    struct UnitGroup {
        std::vector<int> elements;
        std::vector<std::optional<int>> inverse;  // indexed by element id
    };

    UnitGroup units() const {
        UnitGroup u;
        u.inverse.resize(size_);
        for (int a = 0; a < size_; ++a) {
            if (auto b = inverse(a)) {
                u.elements.push_back(a);
                u.inverse[a] = *b;
            }
        }
        return u;
    }

    bool is_semifield() const {
        for (int a = 0; a < size_; ++a)
            if (a != zero_ && !inverse(a)) return false;
        return true;
    }

    bool operator==(const SemiringTable& o) const {
        return size_ == o.size_ && zero_ == o.zero_ && one_ == o.one_ &&
               add_ == o.add_ && mul_ == o.mul_;
    }

private:
    void validate() const {
        if (size_ < 2) throw ValidationError("semiring needs at least 0 and 1");
        if (zero_ == one_) throw ValidationError("0 = 1 is not a semiring");
        auto square = [&](const std::vector<std::vector<int>>& t, const char* w) {
            if (static_cast<int>(t.size()) != size_)
                throw ValidationError(std::string(w) + ": wrong row count");
            for (const auto& row : t) {
                if (static_cast<int>(row.size()) != size_)
                    throw ValidationError(std::string(w) + ": wrong row length");
                for (int v : row)
                    if (v < 0 || v >= size_)
                        throw ValidationError(std::string(w) + ": entry out of range");
            }
        };
        square(add_, "add");
        square(mul_, "mul");
        if (zero_ < 0 || zero_ >= size_ || one_ < 0 || one_ >= size_)
            throw ValidationError("zero/one out of range");
        for (int a = 0; a < size_; ++a) {
            if (add_[zero_][a] != a || add_[a][zero_] != a)
                throw ValidationError("0 is not an additive identity");
            if (mul_[one_][a] != a || mul_[a][one_] != a)
                throw ValidationError("1 is not a multiplicative identity");
            if (mul_[zero_][a] != zero_ || mul_[a][zero_] != zero_)
                throw ValidationError("0 is not multiplicatively absorbing");
        }
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b) {
                if (add_[a][b] != add_[b][a]) throw ValidationError("addition not commutative");
                if (mul_[a][b] != mul_[b][a]) throw ValidationError("multiplication not commutative");
            }
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b)
                for (int c = 0; c < size_; ++c) {
                    if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
                        throw ValidationError("addition not associative");
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw ValidationError("multiplication not associative");
                    if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
                        throw ValidationError("multiplication does not distribute");
                }
    }

    int size_, zero_, one_;
    std::vector<std::vector<int>> add_, mul_;
};

/// Cheap-to-copy handle on a semiring: one of the builtins or a shared
/// finite table.
class Semiring {
public:
    static Semiring boolean() { return Semiring(SemiringKind::Boolean); }
    static Semiring qmax() { return Semiring(SemiringKind::QMax); }
    static Semiring zmax() { return Semiring(SemiringKind::ZMax); }
    static Semiring naturals() { return Semiring(SemiringKind::Naturals); }
    static Semiring table(SemiringTable t) {
        Semiring s(SemiringKind::Table);
        s.tab_ = std::make_shared<const SemiringTable>(std::move(t));
        return s;
    }

    SemiringKind kind() const { return kind_; }
    bool is_table() const { return kind_ == SemiringKind::Table; }
    const SemiringTable& table() const {
        if (!tab_) throw IncompatibleOperands("not a table semiring");
        return *tab_;
    }

    bool same_as(const Semiring& o) const {
        if (kind_ != o.kind_) return false;
        if (kind_ != SemiringKind::Table) return true;
        return tab_ == o.tab_ || *tab_ == *o.tab_;
    }

    bool is_idempotent() const {
        switch (kind_) {
            case SemiringKind::Boolean:
            case SemiringKind::QMax:
            case SemiringKind::ZMax: return true;
            case SemiringKind::Naturals: return false;
            case SemiringKind::Table: return tab_->is_idempotent();
        }
        return false;
    }

    bool is_totally_ordered_idempotent() const {
        switch (kind_) {
            case SemiringKind::Boolean:
            case SemiringKind::QMax:
            case SemiringKind::ZMax: return true;
            case SemiringKind::Naturals: return false;
            case SemiringKind::Table: return tab_->is_totally_ordered_idempotent();
        }
        return false;
    }

    bool is_semifield() const {
        switch (kind_) {
            case SemiringKind::Boolean:
            case SemiringKind::QMax:
            case SemiringKind::ZMax: return true;
            case SemiringKind::Naturals: return false;
            case SemiringKind::Table: return tab_->is_semifield();
        }
        return false;
    }

    std::string name() const {
        switch (kind_) {
            case SemiringKind::Boolean: return "boolean";
            case SemiringKind::QMax: return "qmax";
            case SemiringKind::ZMax: return "zmax";
            case SemiringKind::Naturals: return "nat";
            case SemiringKind::Table:
                return "table[" + std::to_string(tab_->size()) + "]";
        }
        return "?";
    }

    /// Builtin semirings by their string tags.
    static Semiring by_name(const std::string& tag) {
        if (tag == "boolean") return boolean();
        if (tag == "qmax") return qmax();
        if (tag == "zmax") return zmax();
        if (tag == "nat") return naturals();
        throw IncompatibleOperands("unknown semiring tag: " + tag);
    }

private:
    explicit Semiring(SemiringKind k) : kind_(k) {}
    SemiringKind kind_;
    std::shared_ptr<const SemiringTable> tab_;
};

/// One element of a semiring, tagged with its parent.  Numeric kinds store a
/// rational (plus a bottom flag for the tropical -inf); table kinds store an
/// element index.  Arithmetic never leaves the parent semiring.
class SemiringElement {
public:
    static SemiringElement zero(const Semiring& r) {
        switch (r.kind()) {
            case SemiringKind::Boolean:
            case SemiringKind::Naturals: return number(r, 0);
            case SemiringKind::QMax:
            case SemiringKind::ZMax: return bottom(r);
            case SemiringKind::Table: return from_index(r, r.table().zero());
        }
        throw IncompatibleOperands("bad kind");
    }

    static SemiringElement one(const Semiring& r) {
        switch (r.kind()) {
            case SemiringKind::Boolean:
            case SemiringKind::Naturals: return number(r, 1);
            case SemiringKind::QMax:
            case SemiringKind::ZMax: return number(r, 0);
            case SemiringKind::Table: return from_index(r, r.table().one());
        }
        throw IncompatibleOperands("bad kind");
    }

    /// The tropical -inf (the additive zero of qmax/zmax).
    static SemiringElement bottom(const Semiring& r) {
        require_tropical(r);
        SemiringElement e(r);
        e.bottom_ = true;
        return e;
    }

    static SemiringElement number(const Semiring& r, Rational v) {
        SemiringElement e(r);
        switch (r.kind()) {
            case SemiringKind::Boolean:
                if (v != 0 && v != 1)
                    throw IncompatibleOperands("boolean element must be 0 or 1");
                break;
            case SemiringKind::ZMax:
                if (boost::multiprecision::denominator(v) != 1)
                    throw IncompatibleOperands("zmax element must be an integer");
                break;
            case SemiringKind::Naturals:
                if (boost::multiprecision::denominator(v) != 1 || v < 0)
                    throw IncompatibleOperands("natural must be a nonnegative integer");
                break;
            case SemiringKind::QMax: break;
            case SemiringKind::Table:
                throw IncompatibleOperands("table elements are indices");
        }
        e.q_ = std::move(v);
        return e;
    }

    static SemiringElement from_index(const Semiring& r, int idx) {
        if (!r.is_table()) throw IncompatibleOperands("not a table semiring");
        if (idx < 0 || idx >= r.table().size())
            throw IncompatibleOperands("element index out of range");
        SemiringElement e(r);
        e.idx_ = idx;
        return e;
    }

    /// Parses "p/q", plain integers, or "-inf"; table elements parse as
    /// indices.
    static SemiringElement parse(const Semiring& r, const std::string& s) {
        if (r.is_table()) return from_index(r, std::stoi(s));
        if (s == "-inf") return bottom(r);
        return number(r, Rational(s));
    }

    const Semiring& ring() const { return ring_; }
    bool is_bottom() const { return bottom_; }
    const Rational& rational() const { return q_; }
    int index() const { return idx_; }

    bool is_zero() const { return *this == zero(ring_); }
    bool is_one() const { return *this == one(ring_); }

    SemiringElement operator+(const SemiringElement& o) const {
        check_ring(o);
        switch (ring_.kind()) {
            case SemiringKind::Boolean:
                return number(ring_, std::max(q_, o.q_));
            case SemiringKind::QMax:
            case SemiringKind::ZMax: {
                if (bottom_) return o;
                if (o.bottom_) return *this;
                return number(ring_, std::max(q_, o.q_));
            }
            case SemiringKind::Naturals:
                return number(ring_, q_ + o.q_);
            case SemiringKind::Table:
                return from_index(ring_, ring_.table().add(idx_, o.idx_));
        }
        throw IncompatibleOperands("bad kind");
    }

    SemiringElement operator*(const SemiringElement& o) const {
        check_ring(o);
        switch (ring_.kind()) {
            case SemiringKind::Boolean:
                return number(ring_, q_ * o.q_);
            case SemiringKind::QMax:
            case SemiringKind::ZMax: {
                if (bottom_ || o.bottom_) return bottom(ring_);
                return number(ring_, q_ + o.q_);
            }
            case SemiringKind::Naturals:
                return number(ring_, q_ * o.q_);
            case SemiringKind::Table:
                return from_index(ring_, ring_.table().mul(idx_, o.idx_));
        }
        throw IncompatibleOperands("bad kind");
    }

    bool operator==(const SemiringElement& o) const {
        check_ring(o);
        if (ring_.is_table()) return idx_ == o.idx_;
        if (bottom_ != o.bottom_) return false;
        return bottom_ || q_ == o.q_;
    }
    bool operator!=(const SemiringElement& o) const { return !(*this == o); }

    /// Strict total order usable as a map key within one semiring.
    bool operator<(const SemiringElement& o) const {
        check_ring(o);
        if (ring_.is_table()) return idx_ < o.idx_;
        if (bottom_ != o.bottom_) return bottom_;
        return !bottom_ && q_ < o.q_;
    }

    std::optional<SemiringElement> mul_inverse() const {
        switch (ring_.kind()) {
            case SemiringKind::Boolean:
                if (q_ == 1) return *this;
                return std::nullopt;
            case SemiringKind::QMax:
            case SemiringKind::ZMax:
                if (bottom_) return std::nullopt;
                return number(ring_, -q_);
            case SemiringKind::Naturals:
                if (q_ == 1) return *this;
                return std::nullopt;
            case SemiringKind::Table: {
                auto inv = ring_.table().inverse(idx_);
                if (!inv) return std::nullopt;
                return from_index(ring_, *inv);
            }
        }
        return std::nullopt;
    }

    bool is_unit() const { return mul_inverse().has_value(); }

    /// k-th multiplicative power; negative k requires invertibility.
    SemiringElement pow(long k) const {
        if (k < 0) {
            auto inv = mul_inverse();
            if (!inv) throw IncompatibleOperands("negative power of a non-unit");
            return inv->pow(-k);
        }
        SemiringElement acc = one(ring_);
        SemiringElement base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (ring_.is_table()) return std::to_string(idx_);
        if (bottom_) return "-inf";
        return q_.str();
    }

private:
    explicit SemiringElement(Semiring r) : ring_(std::move(r)) {}

    static void require_tropical(const Semiring& r) {
        if (r.kind() != SemiringKind::QMax && r.kind() != SemiringKind::ZMax)
            throw IncompatibleOperands("-inf only exists in qmax/zmax");
    }

    void check_ring(const SemiringElement& o) const {
        if (!ring_.same_as(o.ring_))
            throw IncompatibleOperands("elements of different semirings");
    }

    Semiring ring_;
    bool bottom_ = false;
    Rational q_ = 0;
    int idx_ = 0;
};

/// x <= y in the canonical order (1) iff x + y = y.
inline bool canonical_leq(const SemiringElement& a, const SemiringElement& b) {
    return a + b == b;
}

inline bool is_idempotent(const Semiring& s) { return s.is_idempotent(); }

inline bool is_totally_ordered_idempotent(const Semiring& s) {
    return s.is_totally_ordered_idempotent();
}

}  // namespace semicech
