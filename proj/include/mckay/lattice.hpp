#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

using Int = std::int64_t;
using IVec3 = std::array<Int, 3>;
using IMat3 = std::array<IVec3, 3>;  // row-major

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Checked int64 arithmetic. Every quantity in this library is a small
// integer, but an overflow must never turn into a wrong sign.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int floor_mod(Int a, Int m);

Int dot(const IVec3& a, const IVec3& b);
IVec3 cross(const IVec3& a, const IVec3& b);
Int det3(const IVec3& a, const IVec3& b, const IVec3& c);
IVec3 add(const IVec3& a, const IVec3& b);
IVec3 sub(const IVec3& a, const IVec3& b);
IVec3 scale(const IVec3& a, Int k);
Int sum(const IVec3& a);
Int content(const IVec3& a);       // gcd of entries, 0 for the zero vector
IVec3 primitive_integer(const IVec3& a);  // a / content(a)

std::string to_string(const IVec3& v);

/// A rational 3-vector num/den with den > 0 and gcd(num..., den) = 1.
struct RatVec3 {
  IVec3 num{0, 0, 0};
  Int den = 1;

  static RatVec3 make(const IVec3& num, Int den);
  bool is_zero() const { return num == IVec3{0, 0, 0}; }
  /// Coordinates scaled by `denominator`; throws if not integral.
  IVec3 scaled_to(Int denominator) const;
  bool integral_at(Int denominator) const;

  auto operator<=>(const RatVec3&) const = default;
};

std::string to_string(const RatVec3& v);

/// A point of the junior simplex: non-negative coordinates summing to 1.
using JuniorPoint = RatVec3;

/// Overlattice L of Z^3 with Z^3 ⊆ L ⊆ (1/D) Z^3, stored as an echelon
/// basis of D·L.
class Lattice {
 public:
  static Lattice integer();
  /// Z^3 + Σ Z·(g / denominator) for the given scaled generators.
  static Lattice overlattice(Int denominator, const std::vector<IVec3>& scaled_generators);

  Int denominator() const { return denominator_; }
  /// Echelon basis of D·L (rows).
  const IMat3& basis() const { return basis_; }
  /// |det| of the scaled basis: the scaled volume of a fundamental cell.
  Int scaled_covolume() const { return covolume_; }
  /// [L : Z^3].
  Int index() const;

  bool contains_scaled(const IVec3& scaled) const;
  bool contains(const RatVec3& v) const;
  /// Coefficients of `scaled` in the echelon basis; throws if not a member.
  IVec3 coordinates(const IVec3& scaled) const;

  bool operator==(const Lattice& other) const;

 private:
  Lattice(Int denominator, IMat3 basis);

  Int denominator_ = 1;
  IMat3 basis_{};
  Int covolume_ = 1;
};

/// Echelon basis (lower-left zero, positive pivots, reduced above pivots)
/// of the integer row span of `rows`, which must have full rank 3.
IMat3 hermite_normal_form(const std::vector<IVec3>& rows);

struct SmithForm {
  IMat3 s;  // diagonal, s11 | s22 | s33, non-negative
  IMat3 u;  // unimodular, u·m·v = s
  IMat3 v;  // unimodular
};

SmithForm smith_normal_form(const IMat3& m);

IMat3 mat_mul(const IMat3& a, const IMat3& b);
Int mat_det(const IMat3& m);
IMat3 identity3();
/// Inverse of a unimodular matrix (exact, via the adjugate).
IMat3 unimodular_inverse(const IMat3& m);

/// True iff the three points form a Z-basis of L.
/// Throws std::invalid_argument on repeated points.
bool is_unimodular(const RatVec3& v1, const RatVec3& v2, const RatVec3& v3, const Lattice& lattice);

/// Shortest positive multiple of v lying in L. Throws on the zero vector.
RatVec3 primitive(const RatVec3& v, const Lattice& lattice);

}  // namespace mckay
