#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlogic/lattice.hpp"
#include "qlogic/observables.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/smap.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

// Model files are line oriented:
//
//   [logic]
//   elements 0 1 a a' b b'
//   order a 1                 # a <= 1 (bounds are implied anyway)
//   complement a a'
//
//   [state m]       a = 2/5
//   [cond f]        b | a = 0.2
//   [smap p]        a , b = 0.12
//   [observable x]  -1 -> a
//
// Numbers are integers, n/d fractions or decimal literals, all read exactly.
// `#` starts a comment. Tables may omit entries that follow from zero rules
// and additivity; they are completed when the section is resolved.

struct LogicSection {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::string>> complements;

  friend bool operator==(const LogicSection&, const LogicSection&) = default;
};

struct StateEntry {
  std::string element;
  Rational value;
  friend bool operator==(const StateEntry&, const StateEntry&) = default;
};

struct CondEntry {
  std::string event;
  std::string condition;
  Rational value;
  friend bool operator==(const CondEntry&, const CondEntry&) = default;
};

struct SMapEntry {
  std::string first;
  std::string second;
  Rational value;
  friend bool operator==(const SMapEntry&, const SMapEntry&) = default;
};

struct ObservableEntry {
  Rational value;
  std::string element;
  friend bool operator==(const ObservableEntry&, const ObservableEntry&) = default;
};

template <class Entry>
struct Section {
  std::string name;
  std::vector<Entry> entries;
  int line = 0;

  friend bool operator==(const Section& a, const Section& b) {
    return a.name == b.name && a.entries == b.entries;
  }
};

struct ModelFile {
  LogicSection logic;
  std::vector<Section<StateEntry>> states;
  std::vector<Section<CondEntry>> conds;
  std::vector<Section<SMapEntry>> smaps;
  std::vector<Section<ObservableEntry>> observables;

  const Section<StateEntry>* find_state(std::string_view name) const;
  const Section<CondEntry>* find_cond(std::string_view name) const;
  const Section<SMapEntry>* find_smap(std::string_view name) const;
  const Section<ObservableEntry>* find_observable(std::string_view name) const;

  friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

enum class ParseErrorKind { Syntax, UnknownElement, DuplicateSection, Io };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

ModelFile parse_model_text(std::string_view text);
ModelFile parse_model(const std::filesystem::path& path);

/// Renders a model in file syntax; parse_model_text(to_text(m)) == m.
std::string to_text(const ModelFile& model);

// A single section in file syntax, header line included.
std::string section_text(const LogicSection& section);
std::string section_text(const Section<StateEntry>& section);
std::string section_text(const Section<CondEntry>& section);
std::string section_text(const Section<SMapEntry>& section);
std::string section_text(const Section<ObservableEntry>& section);

// Sections built from validated objects, listing every table entry.
LogicSection logic_section(const QuantumLogic& logic);
Section<StateEntry> state_section(std::string name, const State& m);
Section<CondEntry> cond_section(std::string name, const ConditionalState& f);
Section<SMapEntry> smap_section(std::string name, const SMap& p);
Section<ObservableEntry> observable_section(std::string name, const DiscreteObservable& x);

// Resolution: completes omitted entries, then validates. Logic errors
// surface as LogicError, incomplete tables as Error(IncompleteTable) and
// axiom failures as ValidationError.
Logic resolve_logic(const ModelFile& model);
State resolve_state(const Logic& logic, const Section<StateEntry>& section);
ConditionalState resolve_cond(const Logic& logic, const Section<CondEntry>& section);
SMap resolve_smap(const Logic& logic, const Section<SMapEntry>& section);
DiscreteObservable resolve_observable(const Logic& logic, const Section<ObservableEntry>& section);

/// Completes a partial state: m(0) = 0, then m(a ∨ b) = m(a) + m(b) for
/// orthogonal a, b until nothing changes.
std::vector<Rational> complete_state_values(const QuantumLogic& logic,
                                            std::vector<std::optional<Rational>> values);

/// Completes each column of a partial s-map table (zero row and column for
/// 0, then additivity in both arguments, scanning orthogonal pairs and third
/// elements in index order until nothing changes). Throws
/// Error(IncompleteTable) naming the first entry still missing.
PairTable complete_smap_table(const QuantumLogic& logic,
                              std::vector<std::optional<Rational>> cells);

}  // namespace qlogic
