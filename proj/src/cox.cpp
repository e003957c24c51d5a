#include "mds/cox.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mds/cone.hpp"

namespace mds::cox {

bool CoxPresentation::operator==(const CoxPresentation& o) const {
  return label == o.label && var_names == o.var_names && grading == o.grading && relations == o.relations &&
         irrelevant == o.irrelevant && projective == o.projective && seed == o.seed;
}

CoxParseError::CoxParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

struct Line {
  std::size_t number;
  std::size_t indent;  // column offset of the trimmed text (0-based)
  std::string text;
};

std::vector<std::string> split_tokens(const std::string& s) {
  std::string t = s;
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t find_var(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return names.size();
}

}  // namespace

CoxPresentation parse(std::string_view text) {
  CoxPresentation p;
  std::string section;
  std::vector<Line> vars, grading, relations, irrelevant, meta;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
    std::string t = trim(raw);
    if (t.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (t.front() == '[') {
      if (t.back() != ']') throw CoxParseError("unterminated section header", number, indent + 1);
      section = t.substr(1, t.size() - 2);
      if (section != "vars" && section != "grading" && section != "relations" && section != "irrelevant" &&
          section != "meta")
        throw CoxParseError("unknown section [" + section + "]", number, indent + 1);
      continue;
    }
    Line line{number, indent, t};
    if (section == "vars") vars.push_back(line);
    else if (section == "grading") grading.push_back(line);
    else if (section == "relations") relations.push_back(line);
    else if (section == "irrelevant") irrelevant.push_back(line);
    else if (section == "meta") meta.push_back(line);
    else throw CoxParseError("content outside of a section", number, indent + 1);
    if (end == text.size()) break;
  }

  for (const auto& l : meta) {
    auto eq = l.text.find('=');
    if (eq == std::string::npos) throw CoxParseError("expected key=value", l.number, l.indent + 1);
    std::string key = trim(l.text.substr(0, eq));
    std::string value = trim(l.text.substr(eq + 1));
    if (key == "label") {
      p.label = value;
    } else if (key == "projective") {
      if (value != "true" && value != "false")
        throw CoxParseError("projective must be true or false", l.number, l.indent + eq + 2);
      p.projective = value == "true";
    } else if (key == "seed") {
      try {
        std::size_t used = 0;
        p.seed = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw CoxParseError("seed must be an integer", l.number, l.indent + eq + 2);
      }
    } else {
      throw CoxParseError("unknown meta key '" + key + "'", l.number, l.indent + 1);
    }
  }

  for (const auto& l : vars)
    for (auto& tok : split_tokens(l.text)) {
      if (find_var(p.var_names, tok) != p.var_names.size())
        throw CoxParseError("duplicate variable '" + tok + "'", l.number, l.indent + l.text.find(tok) + 1);
      p.var_names.push_back(tok);
    }
  if (p.var_names.empty()) throw CoxParseError("no variables declared", number, 1);
  if (p.var_names.size() > poly::kMaxVariables)
    throw CoxParseError("too many variables", vars.front().number, vars.front().indent + 1);

  std::vector<IntVector> rows;
  for (const auto& l : grading) {
    auto toks = split_tokens(l.text);
    if (toks.size() != p.var_names.size())
      throw CoxParseError("grading row has " + std::to_string(toks.size()) + " entries, expected " +
                              std::to_string(p.var_names.size()),
                          l.number, l.indent + 1);
    IntVector row;
    std::size_t col = 0;
    for (const auto& tok : toks) {
      col = l.text.find(tok, col);
      Int x;
      if (x.set_str(tok, 10) != 0) throw CoxParseError("not an integer: " + tok, l.number, l.indent + col + 1);
      row.push_back(x);
      col += tok.size();
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw CoxParseError("missing [grading] section", number, 1);
  p.grading = IntMatrix(std::move(rows));

  for (const auto& l : relations) {
    try {
      auto f = poly::parse_polynomial(l.text, p.var_names);
      if (f.is_zero()) throw CoxParseError("relation is zero", l.number, l.indent + 1);
      p.relations.push_back(std::move(f));
    } catch (const poly::ParseError& e) {
      throw CoxParseError(e.what(), l.number, l.indent + e.offset() + 1);
    }
  }

  for (const auto& l : irrelevant) {
    std::size_t pos = 0;
    while (pos <= l.text.size()) {
      std::size_t bar = l.text.find('|', pos);
      if (bar == std::string::npos) bar = l.text.size();
      std::string comp = l.text.substr(pos, bar - pos);
      std::vector<std::size_t> idx;
      for (auto& tok : split_tokens(comp)) {
        std::size_t v = find_var(p.var_names, tok);
        if (v == p.var_names.size())
          throw CoxParseError("unknown variable '" + tok + "'", l.number, l.indent + pos + comp.find(tok) + 1);
        idx.push_back(v);
      }
      if (idx.empty()) throw CoxParseError("empty irrelevant component", l.number, l.indent + pos + 1);
      std::sort(idx.begin(), idx.end());
      p.irrelevant.push_back(std::move(idx));
      pos = bar + 1;
    }
  }

  try {
    validate(p);
  } catch (const PreconditionError& e) {
    // Point inhomogeneity reports at the offending relation line.
    std::string msg = e.what();
    for (std::size_t i = 0; i < relations.size(); ++i) {
      std::string tag = "relation " + std::to_string(i + 1) + ":";
      if (msg.rfind(tag, 0) == 0) throw CoxParseError(msg, relations[i].number, relations[i].indent + 1);
    }
    std::size_t line = grading.empty() ? 1 : grading.front().number;
    throw CoxParseError(msg, line, 1);
  }
  return p;
}

CoxPresentation parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string print(const CoxPresentation& p) {
  std::ostringstream out;
  out << "[meta]\n";
  if (!p.label.empty()) out << "label=" << p.label << '\n';
  out << "projective=" << (p.projective ? "true" : "false") << '\n';
  if (p.seed) out << "seed=" << *p.seed << '\n';
  out << "[vars]\n";
  for (std::size_t i = 0; i < p.var_names.size(); ++i) out << (i ? " " : "") << p.var_names[i];
  out << "\n[grading]\n";
  for (std::size_t i = 0; i < p.grading.rows(); ++i) {
    for (std::size_t j = 0; j < p.grading.cols(); ++j) out << (j ? " " : "") << p.grading(i, j).get_str();
    out << '\n';
  }
  out << "[relations]\n";
  for (const auto& f : p.relations) out << poly::to_string(f, p.var_names) << '\n';
  out << "[irrelevant]\n";
  if (!p.irrelevant.empty()) {
    for (std::size_t c = 0; c < p.irrelevant.size(); ++c) {
      if (c) out << " | ";
      for (std::size_t k = 0; k < p.irrelevant[c].size(); ++k)
        out << (k ? "," : "") << p.var_names[p.irrelevant[c][k]];
    }
    out << '\n';
  }
  return out.str();
}

IntVector degree_of_monomial(const CoxPresentation& p, const poly::Monomial& m) {
  if (m.num_vars() != p.num_vars()) throw DimensionMismatch("degree_of_monomial: monomial in a different ring");
  IntVector d(p.rank());
  for (std::size_t i = 0; i < p.num_vars(); ++i)
    if (m[i])
      for (std::size_t k = 0; k < p.rank(); ++k) d[k] += p.grading(k, i) * m[i];
  return d;
}

void validate(const CoxPresentation& p) {
  if (p.grading.cols() != p.num_vars()) throw PreconditionError("grading has the wrong number of columns");
  if (rank(p.grading) != p.grading.rows()) throw PreconditionError("grading matrix is rank deficient");
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& f = p.relations[i];
    if (f.num_vars() != p.num_vars()) throw DimensionMismatch("relation in a different ring");
    if (f.is_zero()) continue;
    const auto& first = f.terms().front().monomial;
    IntVector d0 = degree_of_monomial(p, first);
    for (const auto& t : f.terms()) {
      IntVector d = degree_of_monomial(p, t.monomial);
      if (d != d0)
        throw PreconditionError("relation " + std::to_string(i + 1) + ": inhomogeneous, monomial " +
                                poly::to_string(first, p.var_names) + " has degree " + to_string(d0) + " but " +
                                poly::to_string(t.monomial, p.var_names) + " has degree " + to_string(d));
    }
  }
  if (p.projective && p.rank() == 2) {
    auto eff = geom::cone_from_rays(p.degrees(), 2);
    if (!eff.is_pointed()) throw PreconditionError("projective rank-2 grading with non-pointed effective cone");
  }
}

namespace {

int rank2_orientation(const CoxPresentation& p) {
  if (p.rank() != 2) throw PreconditionError("rank2 order requires a rank-2 grading");
  auto eff = geom::cone_from_rays(p.degrees(), 2);
  if (!eff.is_pointed()) throw PreconditionError("rank2 order requires a pointed effective cone");
  if (eff.rays().size() < 2) return 1;
  // rays() is sorted lexicographically, so rays()[0] is the minimal ray.
  const auto& a = eff.rays()[0];
  const auto& b = eff.rays()[1];
  Int det = a[0] * b[1] - a[1] * b[0];
  return sgn(det);
}

}  // namespace

bool rank2_leq(const CoxPresentation& p, const IntVector& w, const IntVector& w2) {
  int s = rank2_orientation(p);
  if (w.size() != 2 || w2.size() != 2) throw DimensionMismatch("rank2_leq: classes must have two entries");
  auto eff = geom::cone_from_rays(p.degrees(), 2);
  if (!eff.contains(w) || !eff.contains(w2)) throw PreconditionError("rank2_leq: class outside the effective cone");
  Int det = w[0] * w2[1] - w[1] * w2[0];
  return s * sgn(det) >= 0;
}

std::size_t codim_canonical_embedding(const CoxPresentation& p, const poly::GroebnerOptions& opts) {
  return p.num_vars() - poly::krull_dimension(p.ideal(), opts);
}

}  // namespace mds::cox
