#include "simpmon/finite_monoid.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "simpmon/error.hpp"
#include "simpmon/kernels.hpp"

namespace simpmon {

FiniteMonoid::FiniteMonoid(std::string name,
                           std::vector<std::string> element_names,
                           Element unit,
                           std::vector<std::vector<Element>> table)
    : name_(std::move(name)), names_(std::move(element_names)), unit_(unit) {
  const std::size_t n = names_.size();
  if (n == 0) throw input_error("monoid must have at least one element");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
    throw input_error("element names must be distinct");
  if (unit_ >= n) throw input_error("unit index out of range");
  if (table.size() != n) throw input_error("table must have one row per element");
  table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw input_error("table row " + names_[a] + " has the wrong length");
    for (Element x : table[a]) {
      if (x >= n) throw input_error("table entry out of range in row " + names_[a]);
      table_.push_back(x);
    }
  }
}

std::optional<Element> FiniteMonoid::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

std::string LawViolation::describe(const FiniteMonoid& m) const {
  const auto& n = m.element_names();
  switch (kind) {
    case Kind::left_unit:
      return n[m.unit()] + "*" + n[a] + " = " + n[m.product(m.unit(), a)] +
             ", expected " + n[a];
    case Kind::right_unit:
      return n[a] + "*" + n[m.unit()] + " = " + n[m.product(a, m.unit())] +
             ", expected " + n[a];
    case Kind::associativity:
      return "(" + n[a] + "*" + n[b] + ")*" + n[c] + " = " +
             n[m.product(m.product(a, b), c)] + " but " + n[a] + "*(" + n[b] +
             "*" + n[c] + ") = " + n[m.product(a, m.product(b, c))];
  }
  return {};
}

std::optional<LawViolation> find_law_violation(const FiniteMonoid& m,
                                               Exec exec) {
  for (Element a = 0; a < m.size(); ++a) {
    if (m.product(m.unit(), a) != a)
      return LawViolation{LawViolation::Kind::left_unit, a};
    if (m.product(a, m.unit()) != a)
      return LawViolation{LawViolation::Kind::right_unit, a};
  }
  if (auto t = kernels::find_nonassociative_triple(m.flat_table(), m.size(), exec))
    return LawViolation{LawViolation::Kind::associativity, (*t)[0], (*t)[1],
                        (*t)[2]};
  return std::nullopt;
}

bool check_associativity(const FiniteMonoid& m, Exec exec) {
  return !find_law_violation(m, exec).has_value();
}

bool check_associativity(const std::vector<std::vector<Element>>& table,
                         Element unit, Exec exec) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < table.size(); ++i) names.push_back(std::to_string(i));
  return check_associativity(FiniteMonoid("table", names, unit, table), exec);
}

std::vector<Element> idempotents(const FiniteMonoid& m) {
  std::vector<Element> out;
  for (Element e = 0; e < m.size(); ++e)
    if (m.product(e, e) == e) out.push_back(e);
  return out;
}

std::optional<Element> inverse(const FiniteMonoid& m, Element e) {
  for (Element f = 0; f < m.size(); ++f)
    if (m.product(e, f) == m.unit() && m.product(f, e) == m.unit()) return f;
  return std::nullopt;
}

FiniteMonoid rectangular_band_with_unit(std::size_t rows, std::size_t cols) {
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j)
      names.push_back("x" + std::to_string(i) + std::to_string(j));
  const std::size_t n = names.size();
  auto index = [cols](std::size_t i, std::size_t j) {
    return static_cast<Element>(1 + (i - 1) * cols + (j - 1));
  };
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    table[0][a] = static_cast<Element>(a);
    table[a][0] = static_cast<Element>(a);
  }
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j)
      for (std::size_t k = 1; k <= rows; ++k)
        for (std::size_t l = 1; l <= cols; ++l)
          table[index(i, j)][index(k, l)] = index(i, l);
  return FiniteMonoid("P", std::move(names), 0, std::move(table));
}

FiniteMonoid make_monoid_P() { return rectangular_band_with_unit(2, 2); }

FiniteMonoid trivial_monoid() {
  return FiniteMonoid("trivial", {"1"}, 0, {{0}});
}

FiniteMonoid cyclic_group(std::size_t order) {
  if (order == 0) throw input_error("cyclic group of order 0");
  std::vector<std::string> names{"1"};
  for (std::size_t k = 1; k < order; ++k) names.push_back("g" + std::to_string(k));
  if (order == 2) names[1] = "g";
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a][b] = static_cast<Element>((a + b) % order);
  return FiniteMonoid("Z/" + std::to_string(order), std::move(names), 0,
                      std::move(table));
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::vector<std::string> names;
  for (const auto& x : a.element_names())
    for (const auto& y : b.element_names()) names.push_back("(" + x + "," + y + ")");
  const std::size_t nb = b.size();
  const std::size_t n = a.size() * nb;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto x = a.product(static_cast<Element>(p / nb), static_cast<Element>(q / nb));
      const auto y = b.product(static_cast<Element>(p % nb), static_cast<Element>(q % nb));
      table[p][q] = static_cast<Element>(x * nb + y);
    }
  return FiniteMonoid(a.name() + "x" + b.name(), std::move(names),
                      static_cast<Element>(a.unit() * nb + b.unit()),
                      std::move(table));
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

FiniteMonoid parse_monoid(std::istream& is) {
  std::string name;
  std::vector<std::string> elements;
  std::optional<std::string> unit_name;
  std::vector<std::optional<std::vector<Element>>> rows;
  bool have_header = false;

  std::string line;
  std::size_t lineno = 0;
  auto lookup = [&](const Token& t) -> Element {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == t.text) return static_cast<Element>(i);
    throw parse_error(lineno, t.column, "unknown element `" + t.text + "`");
  };

  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    if (!have_header) {
      if (head.text != "monoid" || tokens.size() != 2)
        throw parse_error(lineno, head.column, "expected `monoid <name>`");
      name = tokens[1].text;
      have_header = true;
    } else if (head.text == "elements:") {
      if (!elements.empty())
        throw parse_error(lineno, head.column, "duplicate `elements:` line");
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        for (const auto& e : elements)
          if (e == tokens[k].text)
            throw parse_error(lineno, tokens[k].column,
                              "duplicate element `" + tokens[k].text + "`");
        elements.push_back(tokens[k].text);
      }
      if (elements.empty())
        throw parse_error(lineno, head.column, "no elements listed");
      rows.assign(elements.size(), std::nullopt);
    } else if (head.text == "unit:") {
      if (elements.empty())
        throw parse_error(lineno, head.column, "`unit:` before `elements:`");
      if (tokens.size() != 2)
        throw parse_error(lineno, head.column, "expected `unit: <token>`");
      lookup(tokens[1]);
      unit_name = tokens[1].text;
    } else if (head.text == "row") {
      if (!unit_name)
        throw parse_error(lineno, head.column, "`row` before `unit:`");
      if (tokens.size() < 2 || tokens[1].text.empty() || tokens[1].text.back() != ':')
        throw parse_error(lineno, head.column, "expected `row <token>: ...`");
      Token label = tokens[1];
      label.text.pop_back();
      const Element r = lookup(label);
      if (rows[r])
        throw parse_error(lineno, label.column, "duplicate row `" + label.text + "`");
      if (tokens.size() - 2 != elements.size())
        throw parse_error(lineno, head.column,
                          "row `" + label.text + "` has " +
                              std::to_string(tokens.size() - 2) + " entries, expected " +
                              std::to_string(elements.size()));
      std::vector<Element> row;
      for (std::size_t k = 2; k < tokens.size(); ++k) row.push_back(lookup(tokens[k]));
      rows[r] = std::move(row);
    } else {
      throw parse_error(lineno, head.column, "unexpected `" + head.text + "`");
    }
  }
  if (!have_header) throw parse_error(lineno + 1, 1, "empty monoid file");
  if (elements.empty()) throw parse_error(lineno + 1, 1, "missing `elements:` line");
  if (!unit_name) throw parse_error(lineno + 1, 1, "missing `unit:` line");
  std::vector<std::vector<Element>> table;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r])
      throw parse_error(lineno + 1, 1, "missing row `" + elements[r] + "`");
    table.push_back(std::move(*rows[r]));
  }
  Element unit = 0;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == *unit_name) unit = static_cast<Element>(i);
  return FiniteMonoid(std::move(name), std::move(elements), unit, std::move(table));
}

FiniteMonoid load_monoid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return parse_monoid(in);
}

void write_monoid(std::ostream& os, const FiniteMonoid& m) {
  os << "monoid " << m.name() << "\nelements:";
  for (const auto& e : m.element_names()) os << ' ' << e;
  os << "\nunit: " << m.element_name(m.unit()) << '\n';
  for (Element a = 0; a < m.size(); ++a) {
    os << "row " << m.element_name(a) << ':';
    for (Element b = 0; b < m.size(); ++b)
      os << ' ' << m.element_name(m.product(a, b));
    os << '\n';
  }
}

}  // namespace simpmon
