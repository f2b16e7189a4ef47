// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kanforge/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "kanforge/errors.hpp"

namespace kanforge {

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw = raw.substr(0, hash);
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      toks.push_back(
          {raw.substr(start, i - start), lineno, static_cast<int>(start + 1)});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

struct DocBuilder {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  // table name -> (element -> image), with the defining token for diagnostics
  struct TableEntry {
    std::string value;
    Token at;
  };
  std::map<std::string, std::map<std::string, TableEntry>> tables;
  std::optional<std::string> center;
  Token center_at{"", 0, 0};

  int element_index(const std::string& s) const {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == s) return static_cast<int>(i);
    return -1;
  }
};

void parse_table_clause(DocBuilder& doc, const std::string& table,
                        const Token& tok) {
  auto colon = tok.text.find(':');
  if (colon == std::string::npos || colon == 0 ||
      colon + 1 >= tok.text.size())
    throw ParseError("expected ELEM:ELEM in " + table + " clause, got '" +
                         tok.text + "'",
                     tok.line, tok.column);
  std::string from = tok.text.substr(0, colon);
  std::string to = tok.text.substr(colon + 1);
  for (const std::string* s : {&from, &to})
    if (doc.element_index(*s) < 0)
      throw UnknownElement("unknown element '" + *s + "' in " + table +
                               " clause",
                           tok.line, tok.column);
  auto [it, fresh] = doc.tables[table].emplace(from, DocBuilder::TableEntry{to, tok});
  if (!fresh)
    throw DuplicateTableEntry("duplicate " + table + " entry for '" + from +
                                  "' (already set to '" + it->second.value +
                                  "')",
                              tok.line, tok.column);
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty document", 1, 1);

  DocBuilder doc;
  bool saw_header = false;
  for (const auto& line : lines) {
    const Token& kw = line[0];
    if (!saw_header) {
      if (kw.text != "algebra")
        throw ParseError("document must start with 'algebra NAME'", kw.line,
                         kw.column);
      if (line.size() != 2)
        throw ParseError("'algebra' takes exactly one name", kw.line,
                         kw.column);
      doc.name = line[1].text;
      saw_header = true;
      continue;
    }
    if (kw.text == "algebra")
      throw ParseError("second 'algebra' header", kw.line, kw.column);
    if (kw.text == "elements") {
      for (size_t i = 1; i < line.size(); ++i) {
        if (doc.element_index(line[i].text) >= 0)
          throw ParseError("duplicate element '" + line[i].text + "'",
                           line[i].line, line[i].column);
        doc.elements.push_back(line[i].text);
      }
    } else if (kw.text == "order") {
      for (size_t i = 1; i < line.size(); ++i) {
        const Token& tok = line[i];
        auto lt = tok.text.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 >= tok.text.size())
          throw ParseError("expected ELEM<ELEM in order clause, got '" +
                               tok.text + "'",
                           tok.line, tok.column);
        std::string lo = tok.text.substr(0, lt);
        std::string hi = tok.text.substr(lt + 1);
        for (const std::string* s : {&lo, &hi})
          if (doc.element_index(*s) < 0)
            throw UnknownElement("unknown element '" + *s +
                                     "' in order clause",
                                 tok.line, tok.column);
        doc.order.emplace_back(lo, hi);
      }
    } else if (kw.text == "knot" || kw.text == "neg" || kw.text == "star") {
      for (size_t i = 1; i < line.size(); ++i)
        parse_table_clause(doc, kw.text, line[i]);
    } else if (kw.text == "center") {
      if (line.size() != 2)
        throw ParseError("'center' takes exactly one element", kw.line,
                         kw.column);
      if (doc.element_index(line[1].text) < 0)
        throw UnknownElement("unknown element '" + line[1].text +
                                 "' in center clause",
                             line[1].line, line[1].column);
      if (doc.center)
        throw ParseError("second 'center' clause", kw.line, kw.column);
      doc.center = line[1].text;
      doc.center_at = line[1];
    } else {
      throw ParseError("unknown keyword '" + kw.text + "'", kw.line,
                       kw.column);
    }
  }
  if (doc.elements.empty())
    throw ParseError("document declares no elements", 1, 1);

  FinLattice lat;
  try {
    lat = FinLattice::build(PosetInput{doc.elements, doc.order});
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()), 1, 1);
  }

  auto table_of = [&](const std::string& name)
      -> std::optional<std::vector<int>> {
    auto it = doc.tables.find(name);
    if (it == doc.tables.end()) return std::nullopt;
    std::vector<int> table(doc.elements.size(), -1);
    int line = 0, column = 0;
    for (const auto& [from, entry] : it->second) {
      table[doc.element_index(from)] = doc.element_index(entry.value);
      line = entry.at.line;
      column = entry.at.column;
    }
    std::vector<std::string> missing;
    for (size_t i = 0; i < table.size(); ++i)
      if (table[i] < 0) missing.push_back(doc.elements[i]);
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
      throw PartialTable(name + " table is missing entries for: " + list,
                         line, column, missing);
    }
    return table;
  };

  std::optional<int> center;
  if (doc.center) center = doc.element_index(*doc.center);
  return make_algebra(doc.name, std::move(lat), table_of("knot"),
                      table_of("neg"), table_of("star"), center);
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

namespace {

void print_table(std::ostream& out, const Algebra& a, const std::string& name,
                 const std::vector<int>& table) {
  const int per_line = 8;
  for (int x = 0; x < a.size(); ++x) {
    if (x % per_line == 0) out << (x ? "\n" : "") << name;
    out << " " << a.name_of(x) << ":" << a.name_of(table[x]);
  }
  out << "\n";
}

}  // namespace

std::string print_algebra(const Algebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name << "\n";
  const int per_line = 8;
  for (int x = 0; x < a.size(); ++x) {
    if (x % per_line == 0) out << (x ? "\nelements" : "elements");
    out << " " << a.name_of(x);
  }
  out << "\n";
  auto covers = a.lattice.covers();
  if (!covers.empty()) {
    for (size_t i = 0; i < covers.size(); ++i) {
      if (i % per_line == 0) out << (i ? "\norder" : "order");
      out << " " << a.name_of(covers[i].first) << "<"
          << a.name_of(covers[i].second);
    }
    out << "\n";
  }
  if (a.knot) print_table(out, a, "knot", *a.knot);
  if (a.neg) print_table(out, a, "neg", *a.neg);
  if (a.star) print_table(out, a, "star", *a.star);
  if (a.center) out << "center " << a.name_of(*a.center) << "\n";
  return out.str();
}

std::string export_dot(const Algebra& a) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (int x = 0; x < a.size(); ++x)
    out << "  \"" << a.name_of(x) << "\";\n";
  for (auto [x, y] : a.lattice.covers())
    out << "  \"" << a.name_of(x) << "\" -> \"" << a.name_of(y) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kanforge
