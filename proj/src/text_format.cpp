#include "fipkit/text_format.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "fipkit/errors.hpp"

namespace fipkit {

namespace {

struct Record {
  std::size_t line;
  std::vector<std::string_view> tokens;
};

std::vector<Record> tokenize(std::string_view text) {
  std::vector<Record> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Record rec{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) rec.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!rec.tokens.empty()) out.push_back(std::move(rec));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(const Record& rec, std::string_view tok, const char* what) {
  Int v{};
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') throw ParseError(rec.line, std::string("bad ") + what);
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(rec.line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

Degree parse_degree(const Record& rec, std::size_t from, std::size_t n) {
  std::vector<std::int64_t> c;
  for (std::size_t k = 0; k < n; ++k) c.push_back(parse_int<std::int64_t>(rec, rec.tokens[from + k], "degree coordinate"));
  return Degree(std::move(c));
}

void expect_arity(const Record& rec, std::size_t count) {
  if (rec.tokens.size() != count) {
    throw ParseError(rec.line, "'" + std::string(rec.tokens[0]) + "' expects " +
                                   std::to_string(count - 1) + " fields, got " +
                                   std::to_string(rec.tokens.size() - 1));
  }
}

Scalar parse_scalar(const Record& rec, const Field& field, std::string_view tok) {
  try {
    return field.parse(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(rec.line, e.what());
  }
}

struct Header {
  Field field;
  std::size_t n;
};

Header parse_header(const std::vector<Record>& recs) {
  if (recs.empty() || recs[0].tokens[0] != "field") {
    throw ParseError(recs.empty() ? 0 : recs[0].line, "expected 'field' as the first record");
  }
  expect_arity(recs[0], 2);
  std::optional<Field> field;
  try {
    field = Field::from_name(recs[0].tokens[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(recs[0].line, e.what());
  }
  if (recs.size() < 2 || recs[1].tokens[0] != "vars") {
    throw ParseError(recs.size() < 2 ? 0 : recs[1].line, "expected 'vars' as the second record");
  }
  expect_arity(recs[1], 2);
  const auto n = parse_int<std::size_t>(recs[1], recs[1].tokens[1], "variable count");
  return {*field, n};
}

void write_degree(std::ostream& out, const Degree& g) {
  for (auto c : g.coords()) out << ' ' << c;
}

}  // namespace

GradedModule parse_module(std::string_view text) {
  const auto recs = tokenize(text);
  const Header h = parse_header(recs);
  GradedModule m(h.field, h.n);

  struct PendingMap {
    const Record* rec;
    MapKey key;
  };
  std::vector<PendingMap> pending;
  for (std::size_t r = 2; r < recs.size(); ++r) {
    const Record& rec = recs[r];
    const auto kw = rec.tokens[0];
    if (kw == "component") {
      expect_arity(rec, h.n + 2);
      Degree g = parse_degree(rec, 1, h.n);
      const auto d = parse_int<std::size_t>(rec, rec.tokens[h.n + 1], "dimension");
      if (d == 0) throw ParseError(rec.line, "component dimension must be positive");
      if (!m.components.emplace(g, d).second) {
        throw ParseError(rec.line, "duplicate component " + to_string(g));
      }
    } else if (kw == "map") {
      if (rec.tokens.size() < h.n + 2) throw ParseError(rec.line, "'map' needs a degree and an axis");
      Degree g = parse_degree(rec, 1, h.n);
      const auto axis = parse_int<std::size_t>(rec, rec.tokens[h.n + 1], "axis");
      if (axis < 1 || axis > h.n) throw ParseError(rec.line, "axis out of range 1.." + std::to_string(h.n));
      pending.push_back({&rec, MapKey{std::move(g), axis - 1}});
    } else if (kw == "field" || kw == "vars") {
      throw ParseError(rec.line, "duplicate '" + std::string(kw) + "' record");
    } else {
      throw ParseError(rec.line, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  // Map shapes depend on component dimensions, which may be declared later.
  for (const auto& [rec, key] : pending) {
    const std::size_t src = m.dim(key.source);
    const std::size_t dst = m.dim(add(key.source, Degree::unit(h.n, key.axis)));
    const std::size_t given = rec->tokens.size() - (h.n + 2);
    if (given != src * dst) {
      throw ParseError(rec->line, "map expects " + std::to_string(dst) + "x" + std::to_string(src) +
                                      " = " + std::to_string(src * dst) + " entries, got " +
                                      std::to_string(given));
    }
    DenseMatrix mat(h.field, dst, src);
    for (std::size_t k = 0; k < given; ++k) {
      mat.set(k / src, k % src, parse_scalar(*rec, h.field, rec->tokens[h.n + 2 + k]));
    }
    if (!m.maps.emplace(key, std::move(mat)).second) {
      throw ParseError(rec->line, "duplicate map");
    }
  }
  return m;
}

std::string serialize(const GradedModule& m) {
  std::ostringstream out;
  out << "field " << m.field.name() << "\n";
  out << "vars " << m.n << "\n";
  for (const auto& [g, d] : m.components) {
    out << "component";
    write_degree(out, g);
    out << ' ' << d << "\n";
  }
  for (const auto& [key, mat] : m.maps) {
    out << "map";
    write_degree(out, key.source);
    out << ' ' << key.axis + 1;
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) out << ' ' << m.field.format(mat.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

MonomialMatrix parse_matrix(std::string_view text, SupportCheck check) {
  const auto recs = tokenize(text);
  const Header h = parse_header(recs);
  std::optional<std::size_t> nrows;
  std::optional<std::size_t> ncols;
  std::vector<Degree> row_degrees;
  std::vector<Degree> col_degrees;
  struct PendingEntry {
    const Record* rec;
    std::size_t i;
    std::size_t j;
    Scalar value;
  };
  std::vector<PendingEntry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  for (std::size_t r = 2; r < recs.size(); ++r) {
    const Record& rec = recs[r];
    const auto kw = rec.tokens[0];
    if (kw == "rows" || kw == "cols") {
      expect_arity(rec, 2);
      auto& slot = kw == "rows" ? nrows : ncols;
      if (slot) throw ParseError(rec.line, "duplicate '" + std::string(kw) + "' record");
      if (!row_degrees.empty() || !col_degrees.empty() || !entries.empty()) {
        throw ParseError(rec.line, "'" + std::string(kw) + "' must precede degree and entry records");
      }
      slot = parse_int<std::size_t>(rec, rec.tokens[1], "count");
    } else if (kw == "rowdeg" || kw == "coldeg") {
      if (!nrows || !ncols) throw ParseError(rec.line, "'rows' and 'cols' must come first");
      expect_arity(rec, h.n + 1);
      const bool is_row = kw == "rowdeg";
      auto& labels = is_row ? row_degrees : col_degrees;
      if (labels.size() == (is_row ? *nrows : *ncols)) {
        throw ParseError(rec.line, "too many '" + std::string(kw) + "' records");
      }
      labels.push_back(parse_degree(rec, 1, h.n));
    } else if (kw == "entry") {
      if (!nrows || !ncols) throw ParseError(rec.line, "'rows' and 'cols' must come first");
      expect_arity(rec, 4);
      const auto i = parse_int<std::size_t>(rec, rec.tokens[1], "row index");
      const auto j = parse_int<std::size_t>(rec, rec.tokens[2], "column index");
      if (i >= *nrows || j >= *ncols) throw ParseError(rec.line, "entry index out of range");
      if (!seen.emplace(i, j).second) throw ParseError(rec.line, "duplicate entry");
      entries.push_back({&rec, i, j, parse_scalar(rec, h.field, rec.tokens[3])});
    } else if (kw == "field" || kw == "vars") {
      throw ParseError(rec.line, "duplicate '" + std::string(kw) + "' record");
    } else {
      throw ParseError(rec.line, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!nrows || !ncols) throw ParseError(0, "missing 'rows' or 'cols' record");
  if (row_degrees.size() != *nrows) {
    throw ParseError(0, "expected " + std::to_string(*nrows) + " 'rowdeg' records, got " +
                            std::to_string(row_degrees.size()));
  }
  if (col_degrees.size() != *ncols) {
    throw ParseError(0, "expected " + std::to_string(*ncols) + " 'coldeg' records, got " +
                            std::to_string(col_degrees.size()));
  }
  DenseMatrix values(h.field, *nrows, *ncols);
  for (auto& e : entries) {
    if (check == SupportCheck::enforce && sgn(e.value) != 0 &&
        !leq(col_degrees[e.j], row_degrees[e.i])) {
      throw ParseError(e.rec->line, "entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                        ") violates the support condition");
    }
    values.set(e.i, e.j, std::move(e.value));
  }
  return MonomialMatrix(h.field, h.n, std::move(row_degrees), std::move(col_degrees),
                        std::move(values));
}

std::string serialize(const MonomialMatrix& a) {
  std::ostringstream out;
  out << "field " << a.field.name() << "\n";
  out << "vars " << a.n << "\n";
  out << "rows " << a.rows() << "\n";
  out << "cols " << a.cols() << "\n";
  for (const auto& g : a.row_degrees) {
    out << "rowdeg";
    write_degree(out, g);
    out << "\n";
  }
  for (const auto& g : a.col_degrees) {
    out << "coldeg";
    write_degree(out, g);
    out << "\n";
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& v = a.entries.at(i, j);
      if (sgn(v) != 0) out << "entry " << i << ' ' << j << ' ' << a.field.format(v) << "\n";
    }
  }
  return out.str();
}

FileKind detect_kind(std::string_view text) {
  for (const auto& rec : tokenize(text)) {
    const auto kw = rec.tokens[0];
    if (kw == "rows" || kw == "cols" || kw == "rowdeg" || kw == "coldeg" || kw == "entry") {
      return FileKind::matrix;
    }
  }
  return FileKind::module;
}

}  // namespace fipkit
