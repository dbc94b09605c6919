#ifndef HULLCENSUS_FIELD_HPP
#define HULLCENSUS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace hullcensus {

/// A small finite field GF(p^e), q = p^e <= 32, with fully tabulated
/// arithmetic and the quadratic (Legendre) character.
///
/// Elements are the integers 0..q-1, read as coefficient vectors of the
/// polynomial basis, little-endian in p. Extension fields use a fixed
/// irreducible modulus per (p, e):
///
///   GF(4):  x^2 + x + 1        GF(16): x^4 + x + 1
///   GF(8):  x^3 + x + 1        GF(25): x^2 + 2
///   GF(9):  x^2 + 1            GF(27): x^3 + 2x + 1
///   GF(32): x^5 + x^2 + 1
///
/// so element indices are reproducible across implementations. Construction
/// checks all field axioms exhaustively (q <= 32 keeps that instant). The
/// tables are immutable and shared; Field is a cheap value type safe for
/// unrestricted concurrent use.
class Field {
  public:
    using Elem = std::uint8_t;

    static constexpr int kMaxOrder = 32;

    /// Builds GF(p^e). Throws std::invalid_argument for non-prime p,
    /// e < 1, or p^e > 32.
    static Field make(int p, int e);

    int p() const { return tables_->p; }
    int e() const { return tables_->e; }
    int q() const { return tables_->q; }

    Elem add(Elem a, Elem b) const { return tables_->add[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return tables_->mul[idx(a, b)]; }
    Elem neg(Elem a) const { return tables_->neg[a]; }
    Elem inv(Elem a) const; // throws std::domain_error on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0.
    /// In characteristic 2 every nonzero element is a square.
    int eta(Elem a) const { return tables_->eta[a]; }

    Elem one() const { return 1; }
    Elem zero() const { return 0; }

    /// Coefficients of the modulus polynomial (empty for prime fields).
    const std::vector<int>& modulus() const { return tables_->modulus; }

    bool same_field(const Field& other) const { return tables_ == other.tables_; }

  private:
    struct Tables {
        int p = 0;
        int e = 0;
        int q = 0;
        std::vector<Elem> add;
        std::vector<Elem> mul;
        std::vector<Elem> neg;
        std::vector<Elem> inv;
        std::vector<std::int8_t> eta;
        std::vector<int> modulus;
    };

    explicit Field(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}

    std::size_t idx(Elem a, Elem b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(tables_->q) + b;
    }

    std::shared_ptr<const Tables> tables_;
};

/// Spec-facing constructor name.
inline Field make_field(int p, int e) { return Field::make(p, e); }

/// Shared per-order field instance (q a prime power <= 32); factors q itself.
const Field& field_for_order(int q);

} // namespace hullcensus

#endif // HULLCENSUS_FIELD_HPP
