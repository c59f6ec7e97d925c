#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "breadthlab/constructions.hpp"
#include "breadthlab/normal_form.hpp"

namespace breadthlab {

/// (prod g_i^alpha_i)(prod_{j<r} [g_j, g_r]^beta_jr) in the free exponent-p
/// class-2 group on m+1 generators, with [a, b] = a b a^-1 b^-1.
struct GroupElement {
  Vector alpha;
  Vector beta;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class ClassTwoGroup {
 public:
  /// Throws EvenPrime for p = 2.
  ClassTwoGroup(std::uint32_t p, std::size_t m);

  Field field() const { return f_; }
  std::uint32_t p() const { return p_; }
  std::size_t m() const { return m_; }
  std::size_t generators() const { return m_ + 1; }
  std::size_t center_dim() const { return bivector_count(m_ + 1); }
  /// log_p of the group order.
  std::size_t order_exponent() const { return generators() + center_dim(); }

  GroupElement identity() const;
  /// g_{i+1}.
  GroupElement generator(std::size_t i) const;
  GroupElement central(std::size_t j, std::size_t r) const;
  GroupElement random(std::mt19937_64& rng) const;
  /// The element with index `idx` in the p-adic enumeration of all p^order elements.
  GroupElement element(std::uint64_t idx) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t e) const;
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
  /// theta(g) for the homomorphism g_i -> images[i].
  GroupElement apply_hom(const std::vector<GroupElement>& images, const GroupElement& g) const;

 private:
  Field f_;
  std::uint32_t p_;
  std::size_t m_;
};

GroupElement gmul(const GroupElement& a, const GroupElement& b, std::uint32_t p, std::size_t m);

/// Coordinates in free_two_step(m): alpha then beta.
Vector psi(const GroupElement& g);
/// Same subspace read in bivector coordinates.
Subspace psi_R(const Subspace& central_subgroup);
/// Psi(theta): the generator map x_i -> psi(images[i]).
GeneratorMap psi_hom(const ClassTwoGroup& g, const std::vector<GroupElement>& images);
/// A generator map applied to an element of free_two_step(g-1).
Vector apply_to_element(const GeneratorMap& phi, const Vector& x);

struct ConjugateType {
  std::vector<std::size_t> exponents;             // distinct, ascending
  std::map<std::size_t, std::uint64_t> elements;  // exponent -> number of elements of G/N
  std::size_t order_exponent = 0;                 // log_p |G/N|
  std::uint64_t cosets = 0;
};

/// Class sizes of G/N for N in the commutator coordinates, from group
/// commutators [g, g_k] over coset representatives modulo the center.
ConjugateType conjugate_type(const ClassTwoGroup& g, const Subspace& n, std::uint64_t budget = std::uint64_t{1} << 24);

struct CorrespondenceCheck {
  bool ok = false;
  ConjugateType conjugate;
  BreadthType breadth;
  std::string message;
};

CorrespondenceCheck verify_correspondence(const ClassTwoGroup& g, const Subspace& n,
                                          std::uint64_t budget = std::uint64_t{1} << 24);

std::string to_string(const ConjugateType& t, std::uint32_t p);

}  // namespace breadthlab
