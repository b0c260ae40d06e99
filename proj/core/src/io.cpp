#include "nearspace/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <type_traits>

#include "nearspace/error.hpp"

namespace nearspace::io {

using nlohmann::json;

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void syntax_error(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::SyntaxError, "cannot parse \"" + std::string(text) + "\": " + why);
}

// Reads a decimal integer reduced mod `modulus` (0 means no reduction).
std::uint64_t read_number(const std::string& s, std::size_t& pos, std::uint64_t modulus) {
  std::uint64_t value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    if (modulus) value %= modulus;
    if (value > (std::uint64_t{1} << 40)) throw Error(ErrorCode::SyntaxError, "number too large");
    ++pos;
  }
  return value;
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

json vector_json(const FiniteField& F, const NfVector& v) {
  json out = json::array();
  for (Elem e : v) out.push_back(render_element(F, e));
  return out;
}

json gen_step_json(const FiniteField& F, const GenStep& step) {
  return std::visit(
      [&](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SwapRows>) {
          return {{"op", "swap"}, {"rows", {s.a, s.b}}};
        } else if constexpr (std::is_same_v<T, ScaleRow>) {
          return {{"op", "scale"}, {"row", s.row}, {"by", render_element(F, s.by)}};
        } else if constexpr (std::is_same_v<T, AddMultiple>) {
          return {{"op", "add_multiple"},
                  {"target", s.target},
                  {"source", s.source},
                  {"coef", render_element(F, s.coef)}};
        } else if constexpr (std::is_same_v<T, TrickStep>) {
          const auto& r = s.record;
          return {{"op", "trick"},
                  {"rows", {r.row_r, r.row_s}},
                  {"column", r.column + 1},
                  {"triple", to_json(F, r.triple)},
                  {"theta", vector_json(F, r.theta)},
                  {"gamma", render_element(F, r.gamma)},
                  {"phi", vector_json(F, r.phi)}};
        } else if constexpr (std::is_same_v<T, AppendRow>) {
          return {{"op", "append"}, {"row", vector_json(F, s.row)}};
        } else {
          return {{"op", "drop"}, {"row", s.row}};
        }
      },
      step);
}

json span_step_json(const FiniteField& F, const SpanStep& step) {
  return std::visit(
      [&](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AdjustmentStep>) {
          return {{"op", "adjust"},
                  {"row", s.row},
                  {"j1", s.j1 + 1},
                  {"j2", s.j2 + 1},
                  {"triple", to_json(F, s.triple)},
                  {"a", vector_json(F, s.a)},
                  {"v", vector_json(F, s.v)},
                  {"gamma", render_element(F, s.gamma)},
                  {"unit", vector_json(F, s.unit)},
                  {"reduced", vector_json(F, s.reduced)}};
        } else {
          return {{"op", "normalize"}, {"row", s.row}, {"by", render_element(F, s.by)}};
        }
      },
      step);
}

json pair_json(const Nearfield& R) { return json::array({R.q(), R.grade()}); }

}  // namespace

std::string render_element(const FiniteField& F, Elem a) {
  const auto coeffs = F.coefficients(a);
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Elem parse_element(const FiniteField& F, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) syntax_error(text, "empty element");
  const std::uint32_t p = F.characteristic();
  std::vector<std::uint32_t> coeffs(F.degree(), 0);

  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      syntax_error(text, "expected '+' or '-'");
    }
    first = false;

    std::uint64_t coef = 1;
    bool have_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = read_number(s, pos, p);
      have_coef = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'x') syntax_error(text, "expected 'x' after '*'");
      }
    }
    std::uint64_t power = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
          syntax_error(text, "expected exponent after '^'");
        }
        power = read_number(s, pos, 0);
      }
    } else if (!have_coef) {
      syntax_error(text, "expected a term");
    }
    if (power >= F.degree()) {
      throw Error(ErrorCode::DegreeTooHigh, "power x^" + std::to_string(power) +
                                                " not below the extension degree " +
                                                std::to_string(F.degree()));
    }
    const std::uint64_t term = negative ? (p - coef % p) % p : coef % p;
    coeffs[power] = static_cast<std::uint32_t>((coeffs[power] + term) % p);
  }
  return F.from_coefficients(coeffs);
}

std::string render_vector(const FiniteField& F, const NfVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += render_element(F, v[i]);
  }
  return out + ")";
}

NfVector parse_vector(const FiniteField& F, std::string_view text) {
  const std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    syntax_error(text, "vector literal must be parenthesised");
  }
  const std::string body = s.substr(1, s.size() - 2);
  if (trim(body).empty()) syntax_error(text, "vector needs at least one entry");
  std::vector<Elem> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    entries.push_back(parse_element(F, std::string_view(body).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return NfVector(std::move(entries));
}

NfMatrix parse_matrix(const FiniteField& F, std::istream& in, std::optional<std::size_t> cols) {
  std::optional<NfMatrix> M;
  if (cols) M.emplace(*cols);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    NfVector v = parse_vector(F, line);
    if (!M) M.emplace(v.size());
    if (v.size() != M->cols()) {
      throw Error(ErrorCode::DimMismatch, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(M->cols()) + " entries, got " +
                                              std::to_string(v.size()));
    }
    M->append(std::move(v));
  }
  return M ? std::move(*M) : NfMatrix(0);
}

NfMatrix parse_matrix(const FiniteField& F, std::string_view text, std::optional<std::size_t> cols) {
  std::istringstream in{std::string(text)};
  return parse_matrix(F, in, cols);
}

std::string render_table(const FiniteField& F, const CayleyTable& table, TableFormat format) {
  std::vector<std::string> labels;
  for (Elem e : table.labels) labels.push_back(render_element(F, e));
  const std::size_t n = table.size();

  if (format == TableFormat::Json) {
    json entries = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(render_element(F, table.at(r, c)));
      entries.push_back(std::move(row));
    }
    return json{{"labels", labels}, {"entries", entries}}.dump(2) + "\n";
  }

  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "o";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t r = 0; r < n; ++r) {
      out << labels[r];
      for (std::size_t c = 0; c < n; ++c) out << ',' << render_element(F, table.at(r, c));
      out << '\n';
    }
    return out.str();
  }

  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  auto cell = [&](const std::string& s) { return std::string(width - s.size() + 1, ' ') + s; };
  out << cell("o") << " |";
  for (const auto& l : labels) out << cell(l);
  out << '\n' << std::string(width + 1, '-') << "-+" << std::string(n * (width + 1), '-') << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    out << cell(labels[r]) << " |";
    for (std::size_t c = 0; c < n; ++c) out << cell(render_element(F, table.at(r, c)));
    out << '\n';
  }
  return out.str();
}

std::string render_set(const FiniteField& F, const oracle::VectorSet& set) {
  std::vector<std::string> lines;
  for (const auto& v : set.vectors()) lines.push_back(render_vector(F, v));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

json to_json(const FiniteField& F, const NfVector& v) { return vector_json(F, v); }

json to_json(const FiniteField& F, const NDTriple& t) {
  return json::array(
      {render_element(F, t.alpha), render_element(F, t.beta), render_element(F, t.lambda)});
}

json to_json(const FiniteField& F, const GenCertificate& cert) {
  json out = json::array();
  for (const auto& step : cert.steps) out.push_back(gen_step_json(F, step));
  return out;
}

json to_json(const FiniteField& F, const SpanCertificate& cert) {
  json out = to_json(F, cert.gen);
  for (const auto& step : cert.steps) out.push_back(span_step_json(F, step));
  return out;
}

json gen_result_json(const Nearfield& R, const GenResult& result) {
  const auto& F = R.field();
  json basis = json::array();
  for (const auto& u : result.basis.rows) basis.push_back(vector_json(F, u));
  return {{"pair", pair_json(R)},
          {"n", result.basis.n},
          {"basis", basis},
          {"rank", result.basis.rank()},
          {"certificate", to_json(F, result.certificate)},
          {"field_mode", result.basis.field_mode}};
}

json span_result_json(const Nearfield& R, const SpanResult& result) {
  const auto& F = R.field();
  json out{{"pair", pair_json(R)},
           {"n", result.gen_basis.n},
           {"field_mode", result.field_mode},
           {"is_subspace_of_inputs_gen", is_subspace(R, result.gen_basis).is_subspace},
           {"certificate", to_json(F, result.certificate)}};
  if (result.field_mode) {
    json basis = json::array();
    for (const auto& u : result.rows) basis.push_back(vector_json(F, u));
    out["mask"] = nullptr;
    out["basis"] = basis;
    out["dimension"] = result.rows.size();
  } else {
    json mask = json::array();
    for (auto i : result.mask.positions()) mask.push_back(i + 1);
    out["mask"] = mask;
    out["dimension"] = result.mask.dimension();
  }
  return out;
}

GenBasis basis_from_json(const Nearfield& R, const json& doc) {
  try {
    GenBasis basis;
    basis.n = doc.at("n").get<std::size_t>();
    basis.field_mode = doc.value("field_mode", false);
    for (const auto& row : doc.at("basis")) {
      std::vector<Elem> entries;
      for (const auto& e : row) entries.push_back(parse_element(R.field(), e.get<std::string>()));
      if (entries.size() != basis.n) throw Error(ErrorCode::DimMismatch, "basis row length differs from n");
      basis.rows.emplace_back(std::move(entries));
    }
    if (!basis.field_mode && !satisfies_column_condition(basis)) {
      throw Error(ErrorCode::BadRange, "basis violates the one-nonzero-per-column condition");
    }
    return basis;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed basis document: ") + e.what());
  }
}

}  // namespace nearspace::io
