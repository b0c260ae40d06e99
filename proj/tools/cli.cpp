#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nearspace/nearspace.hpp"

namespace nearspace::cli {

namespace {

using nlohmann::json;

Format format_or(const JobSpec& job, Format fallback) { return job.format.value_or(fallback); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

NfMatrix load_matrix(const Nearfield& R, const JobSpec& job) {
  NfMatrix M = job.input_path ? io::parse_matrix(R.field(), read_file(*job.input_path), job.n)
                              : NfMatrix(job.n.value_or(0));
  for (const auto& literal : job.inline_vectors) {
    NfVector v = io::parse_vector(R.field(), literal);
    if (M.row_count() == 0 && !job.n && !job.input_path) M = NfMatrix(v.size());
    M.append(std::move(v));
  }
  return M;
}

std::string mask_text(const CoordMask& mask) {
  std::string out = "{";
  for (auto i : mask.positions()) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "}";
}

int check_pair(const JobSpec& job, std::ostream& out) {
  const auto why = dickson_pair_violation(job.q, job.m);
  if (format_or(job, Format::Ascii) == Format::Json) {
    json doc{{"pair", {job.q, job.m}}, {"dickson_pair", !why}};
    doc["reason"] = why ? json(*why) : json(nullptr);
    out << doc.dump(2) << '\n';
  } else if (why) {
    out << "false: " << *why << '\n';
  } else {
    out << "true\n";
  }
  return kSuccess;
}

int table(const JobSpec& job, std::ostream& out) {
  const auto R = Nearfield::build(job.q, job.m);
  const auto format = format_or(job, Format::Ascii);
  const auto tf = format == Format::Json  ? io::TableFormat::Json
                  : format == Format::Csv ? io::TableFormat::Csv
                                          : io::TableFormat::Ascii;
  out << io::render_table(R.field(), cayley_table(R), tf);
  return kSuccess;
}

int triple(const JobSpec& job, std::ostream& out) {
  const auto R = Nearfield::build(job.q, job.m);
  const NDTriple t = find_nd_triple(R);
  const auto& F = R.field();
  const Elem gamma = distributivity_defect(R, t);
  if (format_or(job, Format::Ascii) == Format::Json) {
    out << json{{"pair", {job.q, job.m}}, {"triple", io::to_json(F, t)},
                {"gamma", io::render_element(F, gamma)}}.dump(2)
        << '\n';
  } else {
    out << "alpha=" << io::render_element(F, t.alpha) << " beta=" << io::render_element(F, t.beta)
        << " lambda=" << io::render_element(F, t.lambda) << " gamma=" << io::render_element(F, gamma)
        << '\n';
  }
  return kSuccess;
}

int count(const JobSpec& job, std::ostream& out) {
  if (!job.n) throw Error(ErrorCode::BadRange, "count needs n");
  const auto value = subspace_count(static_cast<std::uint32_t>(*job.n), job.k);
  if (format_or(job, Format::Ascii) == Format::Json) {
    json doc{{"n", *job.n}, {"count", value}};
    doc["k"] = job.k ? json(*job.k) : json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
  return kSuccess;
}

int gen(const JobSpec& job, std::ostream& out) {
  const auto R = Nearfield::build(job.q, job.m);
  const GenResult result = ege(R, load_matrix(R, job));
  if (format_or(job, Format::Json) == Format::Json) {
    out << io::gen_result_json(R, result).dump(2) << '\n';
    return kSuccess;
  }
  out << "rank: " << result.basis.rank() << (result.basis.field_mode ? " (field mode)" : "") << '\n';
  for (const auto& u : result.basis.rows) out << io::render_vector(R.field(), u) << '\n';
  return kSuccess;
}

int span_cmd(const JobSpec& job, std::ostream& out) {
  const auto R = Nearfield::build(job.q, job.m);
  const SpanResult result = span(R, load_matrix(R, job));
  if (format_or(job, Format::Json) == Format::Json) {
    out << io::span_result_json(R, result).dump(2) << '\n';
    return kSuccess;
  }
  if (result.field_mode) {
    out << "dimension: " << result.rows.size() << " (field mode)\n";
    for (const auto& u : result.rows) out << io::render_vector(R.field(), u) << '\n';
  } else {
    out << "dimension: " << result.mask.dimension() << "\nmask: " << mask_text(result.mask) << '\n';
  }
  return kSuccess;
}

bool report(std::ostream& out, const FiniteField& F, const std::string& label,
            const oracle::VectorSet& engine, const oracle::VectorSet& brute) {
  if (engine == brute) {
    out << label << ": MATCH (" << engine.size() << " elements)\n";
    return true;
  }
  out << label << ": MISMATCH (engine " << engine.size() << ", oracle " << brute.size() << ")\n";
  auto show_missing = [&](const oracle::VectorSet& from, const oracle::VectorSet& in, const char* tag) {
    std::vector<std::uint64_t> diff;
    std::set_difference(from.codes().begin(), from.codes().end(), in.codes().begin(),
                        in.codes().end(), std::back_inserter(diff));
    const auto vectors = from.vectors();
    std::size_t shown = 0;
    for (std::size_t i = 0; i < from.codes().size() && shown < 10; ++i) {
      if (std::binary_search(diff.begin(), diff.end(), from.codes()[i])) {
        out << "  " << tag << ' ' << io::render_vector(F, vectors[i]) << '\n';
        ++shown;
      }
    }
  };
  show_missing(engine, brute, "engine-only");
  show_missing(brute, engine, "oracle-only");
  return false;
}

int oracle_verify(const JobSpec& job, std::ostream& out) {
  if (job.mode != "gen" && job.mode != "span" && job.mode != "both") {
    throw Error(ErrorCode::BadRange, "mode must be gen, span or both");
  }
  const auto R = Nearfield::build(job.q, job.m);
  const NfMatrix M = load_matrix(R, job);
  const auto& F = R.field();
  bool ok = true;

  const GenResult g = ege(R, M);
  if (replay(R, M, g.certificate) != g.basis) {
    out << "gen certificate: MISMATCH\n";
    ok = false;
  }
  if (job.mode != "span") {
    ok &= report(out, F, "gen", oracle::enumerate_basis(R, g.basis, job.oracle),
                 oracle::gen_bruteforce(R, M.cols(), M.rows(), job.oracle));
  }
  if (job.mode != "gen") {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < M.cols() && total <= job.oracle.span_cap; ++i) total *= R.order();
    if (total > job.oracle.span_cap && job.mode == "both") {
      out << "span: SKIPPED (|R|^n exceeds span cap " << job.oracle.span_cap << ")\n";
    } else {
      const SpanResult s = span(R, M);
      const auto engine = s.field_mode ? oracle::enumerate_basis(R, s.gen_basis, job.oracle)
                                       : oracle::enumerate_basis(R, s.mask, job.oracle);
      if (!s.field_mode && replay_span(R, M, s.certificate) != s.mask) {
        out << "span certificate: MISMATCH\n";
        ok = false;
      }
      ok &= report(out, F, "span", engine, oracle::span_bruteforce(R, M.cols(), M.rows(), job.oracle));
    }
  }
  out << (ok ? "MATCH" : "MISMATCH") << '\n';
  return ok ? kSuccess : kMismatch;
}

int member(const JobSpec& job, std::ostream& out) {
  if (!job.basis_path) throw Error(ErrorCode::BadRange, "member needs --basis");
  const auto R = Nearfield::build(job.q, job.m);
  json doc;
  try {
    doc = json::parse(read_file(*job.basis_path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("invalid JSON: ") + e.what());
  }
  const GenBasis basis = io::basis_from_json(R, doc);
  for (const auto& literal : job.inline_vectors) {
    const NfVector v = io::parse_vector(R.field(), literal);
    const auto witness = gen_membership(R, basis, v);
    out << io::render_vector(R.field(), v) << ": ";
    if (!witness) {
      out << "false\n";
      continue;
    }
    out << "true (";
    for (std::size_t i = 0; i < witness->size(); ++i) {
      out << (i ? ", " : "") << io::render_element(R.field(), (*witness)[i]);
    }
    out << ")\n";
  }
  return kSuccess;
}

int search_two(const JobSpec& job, std::ostream& out) {
  if (!job.n) throw Error(ErrorCode::BadRange, "search-two needs n");
  const auto R = Nearfield::build(job.q, job.m);
  const auto found = search_two_generators(R, *job.n, job.search_limit);
  if (format_or(job, Format::Ascii) == Format::Json) {
    nlohmann::json doc{{"pair", {job.q, job.m}}, {"n", *job.n}, {"found", found.has_value()}};
    if (found) doc["vectors"] = {io::to_json(R.field(), found->first), io::to_json(R.field(), found->second)};
    out << doc.dump(2) << '\n';
  } else if (found) {
    out << io::render_vector(R.field(), found->first) << ' '
        << io::render_vector(R.field(), found->second) << '\n';
  } else {
    out << "none found\n";
  }
  return kSuccess;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case Command::CheckPair: return check_pair(job, out);
      case Command::Table: return table(job, out);
      case Command::Triple: return triple(job, out);
      case Command::Count: return count(job, out);
      case Command::Gen: return gen(job, out);
      case Command::Span: return span_cmd(job, out);
      case Command::OracleVerify: return oracle_verify(job, out);
      case Command::Member: return member(job, out);
      case Command::SearchTwo: return search_two(job, out);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dickson nearfields and R-subgroups / subspaces of R^n"};
  app.require_subcommand(1);

  JobSpec job;
  if (const char* cap = std::getenv("ORACLE_CAP")) {
    try {
      job.oracle.cap = std::stoull(cap);
    } catch (const std::exception&) {
      err << "error: BadRange: ORACLE_CAP must be a positive integer\n";
      return kInputError;
    }
  }

  const std::map<std::string, Format> formats{
      {"ascii", Format::Ascii}, {"csv", Format::Csv}, {"json", Format::Json}};
  Format format = Format::Ascii;
  std::size_t n_value = 0;
  std::uint32_t k_value = 0;

  auto pair_args = [&](CLI::App* sub) {
    sub->add_option("q", job.q, "prime power q")->required();
    sub->add_option("m", job.m, "grade m")->required();
  };
  auto format_flag = [&](CLI::App* sub) {
    sub->add_option("--format", format, "ascii | csv | json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto input_args = [&](CLI::App* sub) {
    sub->add_option("file", job.input_path, "matrix file, one vector literal per line");
    sub->add_option("--vec", job.inline_vectors, "inline vector literal, e.g. \"(1, x)\"");
    sub->add_option("--n", n_value, "column count when the input has no rows");
    sub->add_option("--oracle-cap", job.oracle.cap, "max |R|^n for closures");
    sub->add_option("--span-cap", job.oracle.span_cap, "max |R|^n for subspace closures");
  };

  struct Entry {
    CLI::App* app;
    Command command;
  };
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* help, Command command) {
    auto* sub = app.add_subcommand(name, help);
    entries.push_back({sub, command});
    format_flag(sub);
    return sub;
  };

  pair_args(add("check-pair", "test whether (q, m) is a Dickson pair", Command::CheckPair));
  pair_args(add("table", "Cayley table of DN(q, m)", Command::Table));
  pair_args(add("triple", "canonical non-distributive triple", Command::Triple));
  auto* count_cmd = add("count", "number of subspaces of R^n (of dimension k)", Command::Count);
  count_cmd->add_option("n", n_value)->required();
  count_cmd->add_option("k", k_value);
  auto* gen_cmd = add("gen", "smallest R-subgroup containing the inputs", Command::Gen);
  pair_args(gen_cmd);
  input_args(gen_cmd);
  auto* span_sub = add("span", "smallest subspace containing the inputs", Command::Span);
  pair_args(span_sub);
  input_args(span_sub);
  auto* verify = add("oracle-verify", "compare engines with brute-force closures",
                     Command::OracleVerify);
  pair_args(verify);
  input_args(verify);
  verify->add_option("--mode", job.mode, "gen | span | both")
      ->check(CLI::IsMember({"gen", "span", "both"}));
  auto* member_cmd = add("member", "membership in a basis from `gen` JSON output", Command::Member);
  pair_args(member_cmd);
  member_cmd->add_option("--basis", job.basis_path)->required();
  member_cmd->add_option("--vec", job.inline_vectors)->required();
  auto* search = add("search-two", "look for two vectors generating R^n", Command::SearchTwo);
  pair_args(search);
  search->add_option("n", n_value)->required();
  search->add_option("--limit", job.search_limit, "maximum pairs to try");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: SyntaxError: " << e.what() << '\n';
    return kInputError;
  }

  for (const auto& e : entries) {
    if (!e.app->parsed()) continue;
    job.command = e.command;
    if (e.app->count("--format")) job.format = format;
    if (e.app->get_option_no_throw("--n") && e.app->count("--n")) job.n = n_value;
    if (e.command == Command::Count || e.command == Command::SearchTwo) job.n = n_value;
    if (e.command == Command::Count && e.app->count("k")) job.k = k_value;
  }
  return run(job, out, err);
}

}  // namespace nearspace::cli
