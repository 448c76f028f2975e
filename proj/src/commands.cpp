#include "eplab/commands.hpp"

#include <charconv>
#include <fstream>

#include "eplab/cmat_io.hpp"

namespace eplab {
namespace {

ReportEnvelope envelope(const std::string& command, const ToleranceConfig& cfg) {
  ReportEnvelope env;
  env.command = command;
  env.tolerances = cfg;
  return env;
}

Index parse_index(std::string_view tok, const std::string& whole) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    throw InputError("invalid size list '" + whole + "'");
  }
  return static_cast<Index>(v);
}

}  // namespace

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (const auto dash = item.find('-'); dash != std::string_view::npos) {
      const Index lo = parse_index(item.substr(0, dash), text);
      const Index hi = parse_index(item.substr(dash + 1), text);
      if (hi < lo) throw InputError("invalid range in '" + text + "'");
      for (Index k = lo; k <= hi; ++k) out.push_back(k);
    } else {
      out.push_back(parse_index(item, text));
    }
  }
  if (out.empty()) throw InputError("empty size list");
  return out;
}

std::pair<Index, Index> parse_dim_range(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const Index d = parse_index(text, text);
    return {d, d};
  }
  return {parse_index(std::string_view(text).substr(0, dash), text),
          parse_index(std::string_view(text).substr(dash + 1), text)};
}

CommandResult cmd_classify(const std::filesystem::path& path, const ToleranceConfig& cfg) {
  cfg.validate();
  const CMatrix m = read_cmat(path);
  CommandResult out{envelope("classify", cfg)};
  out.envelope.inputs = {{"matrix", path.string()}};
  out.envelope.result = to_json(classify(m, cfg));
  return out;
}

CommandResult cmd_product(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                          const ToleranceConfig& cfg) {
  cfg.validate();
  const CMatrix a = read_cmat(path_a);
  const CMatrix b = read_cmat(path_b);
  CommandResult out{envelope("product", cfg)};
  out.envelope.inputs = {{"a", path_a.string()}, {"b", path_b.string()}};

  const auto hk = hartwig_katz(a, b, cfg);
  Json result{{"hartwig_katz", to_json(hk)}, {"hartwig_katz_applicable", hk.a_ep && hk.b_ep}};
  try {
    const auto dj = djordjevic_check(a, b, cfg);
    result["djordjevic"] = {{"applicable", true}, {"report", to_json(dj)}};
  } catch (const InapplicableError& e) {
    result["djordjevic"] = {{"applicable", false}, {"reason", e.what()}};
  }
  result["jv"] = to_json(jv_check(a, b, cfg));
  out.envelope.result = std::move(result);
  return out;
}

CommandResult cmd_decompose(const std::filesystem::path& path_a, const std::filesystem::path& path_b,
                            const ToleranceConfig& cfg) {
  cfg.validate();
  const CMatrix a = read_cmat(path_a);
  const CMatrix b = read_cmat(path_b);
  CommandResult out{envelope("decompose", cfg)};
  out.envelope.inputs = {{"a", path_a.string()}, {"b", path_b.string()}};

  const auto dec = decompose_pair(a, b, cfg);
  Json result{{"decomposition", to_json(dec)}};
  try {
    result["lemma41"] = {{"applicable", true}, {"report", to_json(lemma41_check(dec, cfg))}};
  } catch (const InapplicableError& e) {
    result["lemma41"] = {{"applicable", false}, {"reason", e.what()}};
  }
  result["thm42"] = to_json(thm42_conditions(dec, cfg));
  out.envelope.result = std::move(result);
  return out;
}

CommandResult cmd_fuzz(const FuzzConfig& cfg) {
  const auto res = run_fuzz(cfg);
  CommandResult out{envelope("fuzz", cfg.tol)};
  out.envelope.inputs = {{"suite", to_string(cfg.suite)},
                         {"trials", cfg.trials},
                         {"dims", {cfg.dim_lo, cfg.dim_hi}},
                         {"seed", cfg.seed}};
  out.envelope.result = to_json(res);
  for (const auto& v : res.violations) out.envelope.violations.push_back(to_json(v));
  out.exit_code = res.violations.empty() ? kExitOk : kExitViolations;
  return out;
}

CommandResult cmd_truncate(const std::string& family, const std::vector<Index>& sizes,
                           const std::optional<std::filesystem::path>& out_path, const ToleranceConfig& cfg) {
  const auto series = sweep(parse_family(family), sizes, cfg);
  CommandResult out{envelope("truncate", cfg)};
  out.envelope.inputs = {{"family", family}, {"sizes", sizes}};
  if (out_path) {
    std::ofstream csv(*out_path);
    if (!csv) throw InputError("cannot write '" + out_path->string() + "'");
    csv << to_csv(series);
    out.envelope.inputs["out"] = out_path->string();
  }
  out.envelope.result = to_json(series);
  return out;
}

CommandResult cmd_catalog(const std::optional<std::string>& name, const std::optional<std::filesystem::path>& out_dir) {
  CommandResult out{envelope("catalog", ToleranceConfig{})};
  if (!name) {
    out.envelope.result = {{"names", catalog_names()}};
    return out;
  }
  const auto ex = catalog(*name);
  out.envelope.inputs = {{"name", *name}};
  Json result = to_json(ex);
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    const auto pa = *out_dir / (ex.name + "_a.cmat");
    const auto pb = *out_dir / (ex.name + "_b.cmat");
    write_cmat(pa, ex.a);
    write_cmat(pb, ex.b);
    result["files"] = {pa.string(), pb.string()};
  }
  out.envelope.result = std::move(result);
  return out;
}

CommandResult error_result(const std::string& command, const std::exception& e) {
  CommandResult out{envelope(command, ToleranceConfig{}), kExitUsage};
  Json err{{"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["kind"] = "parse";
    err["line"] = pe->line();
  } else if (dynamic_cast<const InapplicableError*>(&e)) {
    err["kind"] = "inapplicable";
  } else if (dynamic_cast<const InputError*>(&e)) {
    err["kind"] = "input";
  } else {
    err["kind"] = "internal";
  }
  out.envelope.result = {{"error", std::move(err)}};
  return out;
}

}  // namespace eplab
