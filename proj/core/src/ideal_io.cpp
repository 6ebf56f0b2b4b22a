#include "bmres/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace bmres {

namespace {

constexpr int kMaxExponent = 1 << 20;

enum class Mode { Csv, Indexed, Letter };

struct RawMonomial {
  Mode mode;
  std::vector<int> csv;              // Mode::Csv
  std::map<int, int> indexed;        // 1-based variable -> exponent
  std::map<char, int> letters;       // letter -> exponent
};

bool is_csv_line(const std::string& s) {
  bool digit = false, comma = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c == ',') comma = true;
    else if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return digit && comma;
}

int parse_int(const std::string& s, std::size_t& pos, int line) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start) throw ParseError(line, "expected a number");
  long v = std::stol(s.substr(start, pos - start));
  if (v < 0 || v > kMaxExponent) throw ParseError(line, "number out of range");
  return static_cast<int>(v);
}

RawMonomial parse_raw(const std::string& s, int line) {
  RawMonomial raw;
  if (is_csv_line(s)) {
    raw.mode = Mode::Csv;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t pos = 0;
      while (pos < cell.size() &&
             std::isspace(static_cast<unsigned char>(cell[pos])))
        ++pos;
      raw.csv.push_back(parse_int(cell, pos, line));
      while (pos < cell.size() &&
             std::isspace(static_cast<unsigned char>(cell[pos])))
        ++pos;
      if (pos != cell.size()) throw ParseError(line, "bad CSV cell");
    }
    if (raw.csv.empty()) throw ParseError(line, "empty CSV monomial");
    return raw;
  }
  if (s == "1") {  // the unit monomial
    raw.mode = Mode::Letter;
    return raw;
  }
  bool saw_indexed = false, saw_letter = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char c = s[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    if (!std::islower(static_cast<unsigned char>(c)))
      throw ParseError(line, std::string("unexpected character '") + c + "'");
    ++pos;
    // x followed directly by digits is indexed notation (x2 = second
    // variable); any other letter-digit run is rejected.
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (c != 'x')
        throw ParseError(line, "exponents need '^' in letter notation");
      int var = parse_int(s, pos, line);
      if (var < 1) throw ParseError(line, "variable index must be >= 1");
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = parse_int(s, pos, line);
      }
      raw.indexed[var] += e;
      saw_indexed = true;
    } else {
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = parse_int(s, pos, line);
      }
      raw.letters[c] += e;
      saw_letter = true;
    }
  }
  if (saw_indexed && saw_letter)
    throw ParseError(line, "cannot mix indexed and letter variables");
  raw.mode = saw_indexed ? Mode::Indexed : Mode::Letter;
  return raw;
}

MonomialIdeal assemble(const std::vector<std::pair<RawMonomial, int>>& raws) {
  if (raws.empty()) throw ParseError(0, "no monomials given");
  bool any_letter = false, any_other = false;
  for (const auto& [raw, line] : raws) {
    if (raw.mode == Mode::Letter && !raw.letters.empty()) any_letter = true;
    if (raw.mode != Mode::Letter) any_other = true;
  }
  if (any_letter && any_other)
    throw ParseError(raws.front().second,
                     "cannot mix letter monomials with CSV/indexed ones");

  int n = 0;
  std::map<char, int> letter_var;
  if (any_letter) {
    for (const auto& [raw, line] : raws)
      for (const auto& [c, e] : raw.letters) letter_var.emplace(c, 0);
    for (auto& [c, v] : letter_var) v = n++;
  } else {
    for (const auto& [raw, line] : raws) {
      if (raw.mode == Mode::Csv) {
        int len = static_cast<int>(raw.csv.size());
        if (n != 0 && len != n && std::any_of(raws.begin(), raws.end(),
                                              [](const auto& r) {
                                                return r.first.mode == Mode::Csv;
                                              }))
          throw ParseError(line, "CSV monomials have different lengths");
        n = std::max(n, len);
      } else {
        for (const auto& [var, e] : raw.indexed) n = std::max(n, var);
      }
    }
    // all CSV rows must agree on the length
    for (const auto& [raw, line] : raws)
      if (raw.mode == Mode::Csv && static_cast<int>(raw.csv.size()) != n)
        throw ParseError(line, "CSV monomials have different lengths");
  }
  if (n == 0) throw ParseError(raws.front().second, "no variables");

  std::vector<Monomial> gens;
  for (const auto& [raw, line] : raws) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    switch (raw.mode) {
      case Mode::Csv:
        e = raw.csv;
        break;
      case Mode::Indexed:
        for (const auto& [var, k] : raw.indexed)
          e[static_cast<std::size_t>(var - 1)] = k;
        break;
      case Mode::Letter:
        for (const auto& [c, k] : raw.letters)
          e[static_cast<std::size_t>(letter_var.at(c))] = k;
        break;
    }
    gens.emplace_back(std::move(e));
  }
  return minimalize(gens);
}

}  // namespace

MonomialIdeal parse_ideal_text(const std::string& text) {
  std::vector<std::pair<RawMonomial, int>> raws;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    raws.emplace_back(parse_raw(line.substr(begin, end - begin + 1), lineno),
                      lineno);
  }
  return assemble(raws);
}

MonomialIdeal parse_ideal_inline(const std::string& text) {
  std::vector<std::pair<RawMonomial, int>> raws;
  std::string cur;
  auto flush = [&] {
    auto begin = cur.find_first_not_of(" \t");
    if (begin != std::string::npos) {
      auto end = cur.find_last_not_of(" \t");
      raws.emplace_back(parse_raw(cur.substr(begin, end - begin + 1), 1), 1);
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';') flush();
    else cur.push_back(c);
  }
  flush();
  return assemble(raws);
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str());
}

}  // namespace bmres
