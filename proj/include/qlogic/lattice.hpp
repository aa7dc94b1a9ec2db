#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlogic {

/// Index of an element of a finite quantum logic. Indices are dense 0..n-1
/// in declaration order.
class ElementId {
 public:
  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t index) : index_(static_cast<std::uint8_t>(index)) {}

  constexpr std::size_t index() const { return index_; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr std::size_t kMaxElements = 64;

/// Subset of a logic's elements, bit i standing for ElementId(i).
using ElementSet = std::uint64_t;

constexpr ElementSet singleton(ElementId e) { return ElementSet{1} << e.index(); }
constexpr bool contains(ElementSet set, ElementId e) { return (set & singleton(e)) != 0; }

/// Members of `set` in increasing index order.
std::vector<ElementId> members(ElementSet set);

enum class LogicErrorKind {
  InvalidName,
  TooLarge,
  MissingBounds,
  UnknownElement,
  CycleInOrder,
  MissingMeetOrJoin,
  IncompleteComplement,
  AxiomViolation,
};

std::string_view to_string(LogicErrorKind kind);

/// Raised by build_logic. `axiom` is "ii".."v" for AxiomViolation and empty
/// otherwise; `witness` lists the offending element names.
class LogicError : public std::runtime_error {
 public:
  LogicError(LogicErrorKind kind, std::string axiom, std::vector<std::string> witness,
             const std::string& message)
      : std::runtime_error(message),
        kind_(kind),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  LogicErrorKind kind() const { return kind_; }
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  LogicErrorKind kind_;
  std::string axiom_;
  std::vector<std::string> witness_;
};

/// A finite quantum logic (orthomodular lattice). Immutable once built; all
/// queries are table lookups.
class QuantumLogic {
 public:
  std::size_t size() const { return names_.size(); }
  ElementSet all() const { return size() == 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1; }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }

  std::vector<ElementId> elements() const;
  const std::string& name(ElementId e) const { return names_[e.index()]; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Like find but throws LogicError(UnknownElement).
  ElementId at(std::string_view name) const;

  bool leq(ElementId a, ElementId b) const { return contains(up_[a.index()], b); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a.index() * size() + b.index()]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a.index() * size() + b.index()]; }
  ElementId complement(ElementId a) const { return complement_[a.index()]; }

  /// Join of every member of `set`; 0 for the empty set.
  ElementId join_all(ElementSet set) const;
  ElementId join_all(const std::vector<ElementId>& family) const;

  /// a ⊥ b iff a ≤ b⊥.
  bool is_orthogonal(ElementId a, ElementId b) const { return leq(a, complement(b)); }
  /// a ↔ b, decided by the identity a = (a ∧ b) ∨ (a ∧ b⊥).
  bool is_compatible(ElementId a, ElementId b) const {
    return a == join(meet(a, b), meet(a, complement(b)));
  }
  /// Pairwise orthogonality of a family.
  bool mutually_orthogonal(ElementSet set) const;

  /// Elements x with a ≤ x.
  ElementSet up_set(ElementId a) const { return up_[a.index()]; }
  /// Elements x with x ≤ a.
  ElementSet down_set(ElementId a) const { return down_[a.index()]; }
  /// Elements covering 0.
  std::vector<ElementId> atoms() const;

  friend std::shared_ptr<const QuantumLogic> build_logic(
      const std::vector<std::string>&, const std::vector<std::pair<std::string, std::string>>&,
      const std::vector<std::pair<std::string, std::string>>&);

 private:
  QuantumLogic() = default;

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<ElementId> complement_;
  ElementId zero_;
  ElementId one_;
};

using Logic = std::shared_ptr<const QuantumLogic>;

/// Builds and validates a quantum logic.
///
/// `order_pairs` (a, b) mean a ≤ b and may be any generating relation; the
/// reflexive-transitive closure is taken and 0 ≤ x ≤ 1 is implied for every
/// element. `complements` (a, b) set a⊥ = b and b⊥ = a; the pair (0, 1) is
/// implied. Meets and joins must exist for every pair, and the orthocomplement
/// axioms and the orthomodular law are verified exhaustively. Throws
/// LogicError on the first failure.
Logic build_logic(const std::vector<std::string>& elements,
                  const std::vector<std::pair<std::string, std::string>>& order_pairs,
                  const std::vector<std::pair<std::string, std::string>>& complements);

}  // namespace qlogic
