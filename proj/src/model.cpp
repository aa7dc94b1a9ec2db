#include "qlogic/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qlogic/errors.hpp"

namespace qlogic {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool reserved_char(char c) {
  return c == ',' || c == '|' || c == '=' || c == '[' || c == ']' || c == '#';
}

template <class Entry>
const Section<Entry>* find_section(const std::vector<Section<Entry>>& sections, std::string_view name) {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

class Parser {
 public:
  ModelFile run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = std::min(text.find('\n', pos), text.size());
      ++line_;
      std::string_view raw = text.substr(pos, end - pos);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const std::string_view body = trim(raw);
      if (!body.empty()) handle(body);
      if (end == text.size()) break;
      pos = end + 1;
    }
    if (!seen_logic_) throw ParseError(ParseErrorKind::Syntax, 0, "missing [logic] section");
    return std::move(model_);
  }

 private:
  enum class Kind { None, Logic, State, Cond, SMap, Observable };

  [[noreturn]] void syntax(const std::string& why) const {
    throw ParseError(ParseErrorKind::Syntax, line_, why);
  }

  const std::string& element(const std::string& token) const {
    if (!declared_.contains(token))
      throw ParseError(ParseErrorKind::UnknownElement, line_, "unknown element '" + token + "'");
    return token;
  }

  Rational number(std::string_view token) const {
    try {
      return parse_rational(trim(token));
    } catch (const std::invalid_argument& e) {
      syntax(e.what());
    }
  }

  void handle(std::string_view body) {
    if (body.front() == '[') {
      header(body);
      return;
    }
    switch (kind_) {
      case Kind::None: syntax("content before the first section");
      case Kind::Logic: logic_line(body); return;
      case Kind::State: state_line(body); return;
      case Kind::Cond: cond_line(body); return;
      case Kind::SMap: smap_line(body); return;
      case Kind::Observable: observable_line(body); return;
    }
  }

  void header(std::string_view body) {
    if (body.back() != ']') syntax("unterminated section header");
    const auto words = split_ws(body.substr(1, body.size() - 2));
    if (words.empty()) syntax("empty section header");
    const std::string& tag = words[0];
    if (tag == "logic") {
      if (words.size() != 1) syntax("[logic] takes no name");
      if (seen_logic_) throw ParseError(ParseErrorKind::DuplicateSection, line_, "duplicate section [logic]");
      seen_logic_ = true;
      kind_ = Kind::Logic;
      return;
    }
    if (!seen_logic_) syntax("[logic] must be the first section");
    if (words.size() != 2) syntax("section [" + tag + "] needs exactly one name");
    const std::string& name = words[1];
    auto open = [&](auto& sections, Kind kind) {
      if (find_section(sections, name))
        throw ParseError(ParseErrorKind::DuplicateSection, line_,
                         "duplicate section [" + tag + " " + name + "]");
      sections.push_back({name, {}, line_});
      kind_ = kind;
      keys_.clear();
    };
    if (tag == "state") open(model_.states, Kind::State);
    else if (tag == "cond") open(model_.conds, Kind::Cond);
    else if (tag == "smap") open(model_.smaps, Kind::SMap);
    else if (tag == "observable") open(model_.observables, Kind::Observable);
    else syntax("unknown section kind '" + tag + "'");
  }

  void logic_line(std::string_view body) {
    const auto words = split_ws(body);
    const std::string& key = words[0];
    if (key == "elements") {
      if (words.size() < 2) syntax("'elements' needs at least one name");
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string& w = words[i];
        if (std::any_of(w.begin(), w.end(), reserved_char) || w.starts_with("->"))
          syntax("element name '" + w + "' contains a reserved character");
        if (!declared_.insert(w).second) syntax("element '" + w + "' declared twice");
        model_.logic.elements.push_back(w);
      }
    } else if (key == "order" || key == "complement") {
      if (words.size() != 3) syntax("'" + key + "' takes two element names");
      auto& list = key == "order" ? model_.logic.order : model_.logic.complements;
      list.emplace_back(element(words[1]), element(words[2]));
    } else {
      syntax("unknown [logic] directive '" + key + "'");
    }
  }

  std::pair<std::string_view, Rational> split_value(std::string_view body) const {
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) syntax("expected '= <value>'");
    return {trim(body.substr(0, eq)), number(body.substr(eq + 1))};
  }

  void unique_key(const std::string& key) {
    if (!keys_.insert(key).second) syntax("duplicate entry for " + key);
  }

  void state_line(std::string_view body) {
    auto [lhs, value] = split_value(body);
    const auto words = split_ws(lhs);
    if (words.size() != 1) syntax("expected '<element> = <value>'");
    unique_key(words[0]);
    model_.states.back().entries.push_back({element(words[0]), value});
  }

  void cond_line(std::string_view body) {
    auto [lhs, value] = split_value(body);
    const auto bar = lhs.find('|');
    if (bar == std::string_view::npos) syntax("expected '<element> | <element> = <value>'");
    const auto left = split_ws(lhs.substr(0, bar));
    const auto right = split_ws(lhs.substr(bar + 1));
    if (left.size() != 1 || right.size() != 1) syntax("expected '<element> | <element> = <value>'");
    unique_key(left[0] + "|" + right[0]);
    model_.conds.back().entries.push_back({element(left[0]), element(right[0]), value});
  }

  void smap_line(std::string_view body) {
    auto [lhs, value] = split_value(body);
    const auto comma = lhs.find(',');
    if (comma == std::string_view::npos) syntax("expected '<element> , <element> = <value>'");
    const auto left = split_ws(lhs.substr(0, comma));
    const auto right = split_ws(lhs.substr(comma + 1));
    if (left.size() != 1 || right.size() != 1) syntax("expected '<element> , <element> = <value>'");
    unique_key(left[0] + "," + right[0]);
    model_.smaps.back().entries.push_back({element(left[0]), element(right[0]), value});
  }

  void observable_line(std::string_view body) {
    const auto arrow = body.find("->");
    if (arrow == std::string_view::npos) syntax("expected '<value> -> <element>'");
    const Rational value = number(body.substr(0, arrow));
    const auto right = split_ws(body.substr(arrow + 2));
    if (right.size() != 1) syntax("expected '<value> -> <element>'");
    unique_key(to_string(value));
    model_.observables.back().entries.push_back({value, element(right[0])});
  }

  ModelFile model_;
  Kind kind_ = Kind::None;
  bool seen_logic_ = false;
  int line_ = 0;
  std::unordered_set<std::string> declared_;
  std::set<std::string> keys_;
};

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

}  // namespace

const Section<StateEntry>* ModelFile::find_state(std::string_view name) const {
  return find_section(states, name);
}
const Section<CondEntry>* ModelFile::find_cond(std::string_view name) const {
  return find_section(conds, name);
}
const Section<SMapEntry>* ModelFile::find_smap(std::string_view name) const {
  return find_section(smaps, name);
}
const Section<ObservableEntry>* ModelFile::find_observable(std::string_view name) const {
  return find_section(observables, name);
}

ModelFile parse_model_text(std::string_view text) { return Parser().run(text); }

ModelFile parse_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorKind::Io, 0, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

std::string section_text(const LogicSection& s) {
  std::ostringstream out;
  out << "[logic]\n";
  out << "elements " << join_words(s.elements) << "\n";
  for (const auto& [a, b] : s.order) out << "order " << a << " " << b << "\n";
  for (const auto& [a, b] : s.complements) out << "complement " << a << " " << b << "\n";
  return out.str();
}

std::string section_text(const Section<StateEntry>& s) {
  std::ostringstream out;
  out << "[state " << s.name << "]\n";
  for (const auto& e : s.entries) out << e.element << " = " << to_string(e.value) << "\n";
  return out.str();
}

std::string section_text(const Section<CondEntry>& s) {
  std::ostringstream out;
  out << "[cond " << s.name << "]\n";
  for (const auto& e : s.entries)
    out << e.event << " | " << e.condition << " = " << to_string(e.value) << "\n";
  return out.str();
}

std::string section_text(const Section<SMapEntry>& s) {
  std::ostringstream out;
  out << "[smap " << s.name << "]\n";
  for (const auto& e : s.entries) out << e.first << " , " << e.second << " = " << to_string(e.value) << "\n";
  return out.str();
}

std::string section_text(const Section<ObservableEntry>& s) {
  std::ostringstream out;
  out << "[observable " << s.name << "]\n";
  for (const auto& e : s.entries) out << to_string(e.value) << " -> " << e.element << "\n";
  return out.str();
}

std::string to_text(const ModelFile& model) {
  std::string out = section_text(model.logic);
  auto append = [&](const auto& sections) {
    for (const auto& s : sections) out += "\n" + section_text(s);
  };
  append(model.states);
  append(model.conds);
  append(model.smaps);
  append(model.observables);
  return out;
}

LogicSection logic_section(const QuantumLogic& L) {
  LogicSection s;
  for (ElementId e : L.elements()) s.elements.push_back(L.name(e));
  // Covering pairs away from the bounds; the rest is implied.
  for (ElementId a : L.elements()) {
    if (a == L.zero()) continue;
    for (ElementId b : L.elements()) {
      if (b == L.one() || !L.less(a, b)) continue;
      bool covers = true;
      for (ElementId c : L.elements())
        if (L.less(a, c) && L.less(c, b)) covers = false;
      if (covers) s.order.emplace_back(L.name(a), L.name(b));
    }
  }
  for (ElementId a : L.elements()) {
    const ElementId c = L.complement(a);
    if (a < c && !(a == L.zero() && c == L.one()) && !(a == L.one() && c == L.zero()))
      s.complements.emplace_back(L.name(a), L.name(c));
  }
  return s;
}

Section<StateEntry> state_section(std::string name, const State& m) {
  Section<StateEntry> s{std::move(name), {}, 0};
  const QuantumLogic& L = *m.logic();
  for (ElementId e : L.elements()) s.entries.push_back({L.name(e), m(e)});
  return s;
}

Section<CondEntry> cond_section(std::string name, const ConditionalState& f) {
  Section<CondEntry> s{std::move(name), {}, 0};
  const QuantumLogic& L = *f.logic();
  for (ElementId b : L.elements())
    for (ElementId a : members(f.system().members())) s.entries.push_back({L.name(b), L.name(a), f(b, a)});
  return s;
}

Section<SMapEntry> smap_section(std::string name, const SMap& p) {
  Section<SMapEntry> s{std::move(name), {}, 0};
  const QuantumLogic& L = *p.logic();
  for (ElementId a : L.elements())
    for (ElementId b : L.elements()) s.entries.push_back({L.name(a), L.name(b), p(a, b)});
  return s;
}

Section<ObservableEntry> observable_section(std::string name, const DiscreteObservable& x) {
  Section<ObservableEntry> s{std::move(name), {}, 0};
  for (const auto& o : x.outcomes()) s.entries.push_back({o.value, x.logic()->name(o.event)});
  return s;
}

Logic resolve_logic(const ModelFile& model) {
  return build_logic(model.logic.elements, model.logic.order, model.logic.complements);
}

std::vector<Rational> complete_state_values(const QuantumLogic& L,
                                            std::vector<std::optional<Rational>> m) {
  if (!m[L.zero().index()]) m[L.zero().index()] = Rational(0);
  for (bool changed = true; changed;) {
    changed = false;
    for (ElementId a : L.elements())
      for (ElementId b : L.elements()) {
        if (b <= a || !L.is_orthogonal(a, b)) continue;
        const ElementId j = L.join(a, b);
        if (!m[j.index()] && m[a.index()] && m[b.index()]) {
          m[j.index()] = Rational(*m[a.index()] + *m[b.index()]);
          changed = true;
        }
      }
  }
  std::vector<Rational> out;
  for (ElementId e : L.elements()) {
    if (!m[e.index()]) throw Error(ErrorKind::IncompleteTable, "no value for " + L.name(e));
    out.push_back(*m[e.index()]);
  }
  return out;
}

PairTable complete_smap_table(const QuantumLogic& L, std::vector<std::optional<Rational>> cells) {
  const std::size_t n = L.size();
  auto at = [&](ElementId a, ElementId b) -> std::optional<Rational>& { return cells[a.index() * n + b.index()]; };
  for (ElementId c : L.elements()) {
    if (!at(L.zero(), c)) at(L.zero(), c) = Rational(0);
    if (!at(c, L.zero())) at(c, L.zero()) = Rational(0);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (ElementId a : L.elements())
      for (ElementId b : L.elements()) {
        if (b <= a || a == L.zero() || !L.is_orthogonal(a, b)) continue;
        const ElementId j = L.join(a, b);
        for (ElementId c : L.elements()) {
          if (!at(j, c) && at(a, c) && at(b, c)) {
            at(j, c) = Rational(*at(a, c) + *at(b, c));
            changed = true;
          }
          if (!at(c, j) && at(c, a) && at(c, b)) {
            at(c, j) = Rational(*at(c, a) + *at(c, b));
            changed = true;
          }
        }
      }
  }
  PairTable p(n);
  for (ElementId a : L.elements())
    for (ElementId b : L.elements()) {
      if (!at(a, b))
        throw Error(ErrorKind::IncompleteTable, "no value for p(" + L.name(a) + ", " + L.name(b) + ")");
      p(a, b) = *at(a, b);
    }
  return p;
}

State resolve_state(const Logic& logic, const Section<StateEntry>& section) {
  std::vector<std::optional<Rational>> m(logic->size());
  for (const auto& e : section.entries) m[logic->at(e.element).index()] = e.value;
  return validate_state(logic, complete_state_values(*logic, std::move(m)));
}

ConditionalState resolve_cond(const Logic& logic, const Section<CondEntry>& section) {
  const QuantumLogic& L = *logic;
  ElementSet seed = 0;
  for (const auto& e : section.entries) seed |= singleton(L.at(e.condition));
  ConditionalSystem cs = conditional_system_generated(logic, seed);
  PairTable f(L.size());
  for (ElementId a : members(cs.members())) {
    std::vector<std::optional<Rational>> column(L.size());
    bool any = false;
    for (const auto& e : section.entries)
      if (L.at(e.condition) == a) {
        column[L.at(e.event).index()] = e.value;
        any = true;
      }
    if (!any)
      throw Error(ErrorKind::IncompleteTable, "conditional system needs values conditioned on " +
                                                  L.name(a) + " (required by closure)");
    std::vector<Rational> values;
    try {
      values = complete_state_values(L, std::move(column));
    } catch (const Error& err) {
      throw Error(ErrorKind::IncompleteTable, std::string(err.what()) + " given " + L.name(a));
    }
    for (ElementId b : L.elements()) f(b, a) = values[b.index()];
  }
  return validate_conditional_state(logic, std::move(cs), std::move(f));
}

SMap resolve_smap(const Logic& logic, const Section<SMapEntry>& section) {
  const QuantumLogic& L = *logic;
  std::vector<std::optional<Rational>> cells(L.size() * L.size());
  for (const auto& e : section.entries)
    cells[L.at(e.first).index() * L.size() + L.at(e.second).index()] = e.value;
  return validate_smap(logic, complete_smap_table(L, std::move(cells)));
}

DiscreteObservable resolve_observable(const Logic& logic, const Section<ObservableEntry>& section) {
  std::vector<std::pair<Rational, ElementId>> assignment;
  for (const auto& e : section.entries) assignment.emplace_back(e.value, logic->at(e.element));
  return build_observable(logic, std::move(assignment));
}

}  // namespace qlogic
