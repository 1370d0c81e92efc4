#include "rrw/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrw/colored.hpp"
#include "rrw/weights.hpp"

namespace rrw {

using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "tsv") return OutputFormat::Tsv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["theorem"] = theorem_tag(r.id);
  j["bound"] = r.bound;
  ordered_json cases = ordered_json::array();
  for (const CaseResult& c : r.cases) {
    ordered_json cj;
    cj["index"] = c.index;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["match"] = c.match;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["passed"] = r.passed;
  return j;
}

}  // namespace

int emit_verify_reports(const std::vector<Report>& reports, OutputFormat f,
                        std::ostream& out) {
  bool all_passed = true;
  for (const Report& r : reports) all_passed = all_passed && r.passed;

  switch (f) {
    case OutputFormat::Text:
      for (const Report& r : reports) {
        for (const CaseResult& c : r.cases)
          out << "case " << c.index << ": " << c.lhs
              << (c.match ? " == " : " != ") << c.rhs
              << (c.match ? "" : "  MISMATCH") << '\n';
        out << theorem_tag(r.id) << (r.passed ? " PASSED" : " FAILED")
            << " (bound " << r.bound << ")\n";
      }
      break;
    case OutputFormat::Json:
      if (reports.size() == 1) {
        out << report_json(reports.front()).dump(2) << '\n';
      } else {
        ordered_json arr = ordered_json::array();
        for (const Report& r : reports) arr.push_back(report_json(r));
        out << arr.dump(2) << '\n';
      }
      break;
    case OutputFormat::Tsv:
      out << "theorem\tindex\tlhs\trhs\tmatch\n";
      for (const Report& r : reports)
        for (const CaseResult& c : r.cases)
          out << theorem_tag(r.id) << '\t' << c.index << '\t' << c.lhs << '\t'
              << c.rhs << '\t' << (c.match ? "true" : "false") << '\n';
      break;
  }
  return all_passed ? 0 : 1;
}

namespace {

// "Q_6_1" / "A_7_3" style family names.
bool parse_pair_family(const std::string& family, char prefix, int* k,
                       int* i) {
  if (family.size() != 5 || family[0] != prefix || family[1] != '_' ||
      family[3] != '_')
    return false;
  if (!std::isdigit(static_cast<unsigned char>(family[2])) ||
      !std::isdigit(static_cast<unsigned char>(family[4])))
    return false;
  *k = family[2] - '0';
  *i = family[4] - '0';
  return true;
}

std::vector<long long> table_values(const std::string& family, int max_n) {
  std::vector<long long> values;
  values.reserve(max_n + 1);
  int k = 0, i = 0;
  if (parse_pair_family(family, 'Q', &k, &i)) {
    for (int n = 0; n <= max_n; ++n) values.push_back(rank_count(n, k, i));
    return values;
  }
  if (parse_pair_family(family, 'A', &k, &i)) {
    QSeries gf = modular_gf(k, i, max_n);
    for (int n = 0; n <= max_n; ++n) {
      Int v = gf.coeff(n).constant_term();
      values.push_back(v.convert_to<long long>());
    }
    return values;
  }
  if (family == "D") {
    for (int n = 0; n <= max_n; ++n)
      values.push_back(count_partitions(n, PartitionFilter::distinct()));
    return values;
  }
  WeightKind kind;
  try {
    kind = parse_weight_kind(family);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown table family '" + family + "'");
  }
  for (int n = 0; n <= max_n; ++n) values.push_back(weighted_rr_sum(n, kind));
  return values;
}

QSeries series_values(const std::string& name, int order) {
  if (name == "T1_PRODUCT") return theorem1_product(order);
  if (name == "JTP_LHS") return jtp_sides(order).first;
  if (name == "JTP_RHS") return jtp_sides(order).second;
  if (name == "KEY_LHS") return key_identity_sides(order).first;
  if (name == "KEY_RHS") return key_identity_sides(order).second;
  if (name == "LEBESGUE_LHS") return lebesgue_sides(order).first;
  if (name == "LEBESGUE_RHS") return lebesgue_sides(order).second;
  int k = 0, i = 0;
  if (parse_pair_family(name, 'A', &k, &i)) return modular_gf(k, i, order);
  throw std::invalid_argument("unknown series '" + name + "'");
}

void emit_table(const std::string& family, const std::vector<long long>& values,
                OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::Text:
      for (std::size_t n = 0; n < values.size(); ++n)
        out << n << ' ' << values[n] << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json j;
      j["family"] = family;
      j["max_n"] = values.size() - 1;
      ordered_json rows = ordered_json::array();
      for (std::size_t n = 0; n < values.size(); ++n) {
        ordered_json row;
        row["n"] = n;
        row["value"] = values[n];
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Tsv:
      out << "n\tvalue\n";
      for (std::size_t n = 0; n < values.size(); ++n)
        out << n << '\t' << values[n] << '\n';
      break;
  }
}

void emit_series(const std::string& name, const QSeries& s, OutputFormat f,
                 std::ostream& out) {
  switch (f) {
    case OutputFormat::Text:
      for (int k = 0; k <= s.order(); ++k)
        out << k << ": " << s.coeff(k).str() << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json j;
      j["series"] = name;
      j["order"] = s.order();
      ordered_json coeffs = ordered_json::array();
      for (int k = 0; k <= s.order(); ++k) {
        ordered_json row;
        row["k"] = k;
        row["value"] = s.coeff(k).str();
        coeffs.push_back(std::move(row));
      }
      j["coeffs"] = std::move(coeffs);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Tsv:
      out << "k\tvalue\n";
      for (int k = 0; k <= s.order(); ++k)
        out << k << '\t' << s.coeff(k).str() << '\n';
      break;
  }
}

void emit_weight(const Partition& p, WeightKind kind, const std::string& value,
                 OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::Text:
      out << value << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json j;
      j["partition"] = p.str();
      j["kind"] = weight_kind_tag(kind);
      j["weight"] = value;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Tsv:
      out << "partition\tkind\tweight\n";
      out << p.str() << '\t' << weight_kind_tag(kind) << '\t' << value << '\n';
      break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weighted partition identity toolkit"};
  app.name("rrw");
  app.require_subcommand(1);
  // let --format / --output appear after the subcommand too
  app.fallthrough();

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "Output format: text, json or tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--output", output_path,
                 "Write output to this file instead of standard output");

  std::string verify_id;
  int verify_bound = -1;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check an identity (or ALL) exhaustively");
  verify_cmd->add_option("id", verify_id, "Theorem id, or ALL")->required();
  verify_cmd->add_option("--max-n", verify_bound,
                         "Bound: max n, q-order or max L depending on the id")
      ->check(CLI::NonNegativeNumber);

  std::string family;
  int table_max = -1;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Print one counting family as n, value");
  table_cmd->add_option("family", family,
                        "Q_k_i, A_k_i, D or a weight kind tag")
      ->required();
  table_cmd->add_option("--max-n", table_max, "Largest n")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string series_name;
  int series_order = -1;
  CLI::App* series_cmd =
      app.add_subcommand("series", "Print q-coefficients of a named series");
  series_cmd->add_option("name", series_name, "Series name")->required();
  series_cmd->add_option("--order", series_order, "Truncation order")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string parts_text;
  std::string kind_tag;
  CLI::App* weights_cmd = app.add_subcommand(
      "weights", "Print the weight of one partition (parts largest first)");
  weights_cmd->add_option("partition", parts_text,
                          "Comma-separated parts, largest first")
      ->required();
  weights_cmd->add_option("--kind", kind_tag, "Weight kind tag")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* dest = &out;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot open '" << output_path << "'\n";
      return 2;
    }
    dest = &file;
  }

  try {
    OutputFormat f = parse_format(format);

    if (verify_cmd->parsed()) {
      std::vector<Report> reports;
      if (verify_id == "ALL") {
        if (verify_bound >= 0) {
          err << "error: ALL runs every theorem at its default bound; "
                 "--max-n is not accepted\n";
          return 2;
        }
        for (TheoremId id : all_theorem_ids()) reports.push_back(verify(id));
      } else {
        TheoremId id = parse_theorem_id(verify_id);
        reports.push_back(verify_bound >= 0 ? verify(id, verify_bound)
                                            : verify(id));
      }
      return emit_verify_reports(reports, f, *dest);
    }

    if (table_cmd->parsed()) {
      emit_table(family, table_values(family, table_max), f, *dest);
      return 0;
    }

    if (series_cmd->parsed()) {
      emit_series(series_name, series_values(series_name, series_order), f,
                  *dest);
      return 0;
    }

    if (weights_cmd->parsed()) {
      Partition p = Partition::parse(parts_text);
      WeightKind kind = parse_weight_kind(kind_tag);
      std::string value = kind == WeightKind::OmegaSymbolic
                              ? symbolic_weight(p).str()
                              : std::to_string(integer_weight(p, kind));
      emit_weight(p, kind, value, f, *dest);
      return 0;
    }

    err << "error: no command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rrw
