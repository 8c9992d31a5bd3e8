// fsw — command-line front end: every checker, search and construction with
// JSON input and output. Reports are a single JSON document
// {ok, data, elapsed_ms, version}; exit code 0 for ok, 1 when a checker
// found a counterexample or failed a hypothesis, 2 for usage/input errors.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fsw/classify.hpp"
#include "fsw/config.hpp"
#include "fsw/construction.hpp"
#include "fsw/json_io.hpp"

using namespace fsw;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

json load_json_arg(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos ||
      (arg[first] != '[' && arg[first] != '{' && arg[first] != '"' &&
       !std::isdigit(static_cast<unsigned char>(arg[first])))) {
    std::ifstream in(arg);
    if (!in) throw parse_error("cannot open input file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

struct outcome {
  bool ok = true;
  json data = json::object();
};

json positions_json(bset s) {
  json out = json::array();
  for (unsigned e : s.members()) out.push_back(e);
  return out;
}

json uniq_json(const uniq_result& r) {
  json data;
  data["ok"] = r.ok;
  if (!r.ok) data["counterexample"] = {{"a", r.a}, {"b", r.b}};
  return data;
}

json two_uniq_json(const two_uniq_result& r) {
  json data;
  data["ok"] = r.ok;
  if (!r.ok)
    data["counterexample"] = {{"c", io::to_json(r.c)},
                              {"c_prime", io::to_json(r.c_prime)}};
  return data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-sums combinatorics workbench"};
  app.require_subcommand(1);

  // applied while parsing, before any subcommand callback runs
  app.add_option_function<std::size_t>(
      "--cap",
      [](std::size_t v) {
        config::fs_cap = v;
        config::two_uniq_cap = v;
      },
      "override the subset/weighted-sum enumeration caps");

  std::optional<outcome> result;
  auto set = [&result](bool ok, json data) { result = outcome{ok, std::move(data)}; };

  // ---- torus / FS-core ------------------------------------------------
  std::string arg_seq;

  auto* c_fs = app.add_subcommand("fs", "finite sums of a sequence");
  c_fs->add_option("seq", arg_seq, "sequence JSON or file")->required();
  c_fs->callback([&] {
    auto seq = io::fin_seq_from_json(load_json_arg(arg_seq));
    json out = json::array();
    for (const auto& g : fs_set(seq)) out.push_back(io::to_json(g));
    set(true, json{{"fs", out}});
  });

  auto* c_fu = app.add_subcommand("fu", "finite unions of a disjoint family");
  c_fu->add_option("family", arg_seq, "family JSON or file")->required();
  c_fu->callback([&] {
    auto fam = io::bfamily_from_json(load_json_arg(arg_seq));
    set(true, json{{"fu", io::to_json(fu_b(fam))}});
  });

  auto* c_order = app.add_subcommand("order", "order of a group element");
  c_order->add_option("elem", arg_seq, "group element JSON or file")->required();
  c_order->callback([&] {
    auto g = io::group_elem_from_json(load_json_arg(arg_seq));
    set(true, json{{"order", io::small_int(g.order(), "order")}});
  });

  auto* c_classify = app.add_subcommand("classify", "case split on an element");
  c_classify->add_option("elem", arg_seq, "group element JSON or file")->required();
  c_classify->callback([&] {
    auto g = io::group_elem_from_json(load_json_arg(arg_seq));
    set(true, json{{"branch", to_string(classify_element(g))}});
  });

  auto* c_uniq = app.add_subcommand("check-uniq", "uniqueness of finite sums");
  c_uniq->add_option("seq", arg_seq, "sequence JSON or file")->required();
  c_uniq->callback([&] {
    auto r = check_uniqueness(io::fin_seq_from_json(load_json_arg(arg_seq)));
    set(r.ok, uniq_json(r));
  });

  auto* c_2uniq = app.add_subcommand("check-2uniq", "2-uniqueness of finite sums");
  c_2uniq->add_option("seq", arg_seq, "sequence JSON or file")->required();
  c_2uniq->callback([&] {
    auto r = check_2uniqueness(io::fin_seq_from_json(load_json_arg(arg_seq)));
    set(r.ok, two_uniq_json(r));
  });

  auto* c_carac = app.add_subcommand(
      "check-carac", "the three equivalent forms of 2-uniqueness");
  c_carac->add_option("seq", arg_seq, "sequence JSON or file")->required();
  c_carac->callback([&] {
    auto r = check_carac_equivalence(io::fin_seq_from_json(load_json_arg(arg_seq)));
    bool agree = r.cond_i == r.cond_ii && r.cond_ii == r.cond_iii;
    set(agree, json{{"cond_i", r.cond_i},
                    {"cond_ii", r.cond_ii},
                    {"cond_iii", r.cond_iii}});
  });

  auto* c_order4 = app.add_subcommand(
      "verify-order4", "2-uniqueness is automatic for order-4 FS-sets");
  c_order4->add_option("seq", arg_seq, "sequence JSON or file")->required();
  c_order4->callback([&] {
    auto r = verify_order4(io::fin_seq_from_json(load_json_arg(arg_seq)));
    set(r.ok, two_uniq_json(r));
  });

  int rho_class = 1;
  auto* c_arrange = app.add_subcommand("arrange-rho", "sort a Q_i sequence by rho");
  c_arrange->add_option("seq", arg_seq, "sequence JSON or file")->required();
  c_arrange->add_option("--i", rho_class, "which Q_i (1, -1, 3 or -3)")->required();
  c_arrange->callback([&] {
    auto seq = io::fin_seq_from_json(load_json_arg(arg_seq));
    auto arranged = arrange_by_rho(seq, rho_class);
    set(true, json{{"arranged", io::to_json(arranged)}});
  });

  // ---- boolean group ---------------------------------------------------
  std::string arg_x, arg_y, arg_z, arg_a, arg_a0, arg_pairs, arg_witness, arg_parts;
  std::size_t arg_m = 1, arg_mmax = 1;

  auto* c_support = app.add_subcommand("support", "X-support of an element");
  c_support->add_option("--x", arg_x, "independent family")->required();
  c_support->add_option("--y", arg_y, "element of the span")->required();
  c_support->callback([&] {
    auto x = io::bfamily_from_json(load_json_arg(arg_x));
    auto y = io::bset_from_json(load_json_arg(arg_y));
    set(true, json{{"support", positions_json(x_support(x, y))}});
  });

  auto* c_basis = app.add_subcommand("basis", "greedy basis of a family's span");
  c_basis->add_option("family", arg_seq, "family JSON or file")->required();
  c_basis->callback([&] {
    auto fam = io::bfamily_from_json(load_json_arg(arg_seq));
    set(true, json{{"basis", io::to_json(extract_basis(fam))}});
  });

  auto* c_suit = app.add_subcommand("suitable", "check suitability of Y for X");
  c_suit->add_option("--x", arg_x, "independent family")->required();
  c_suit->add_option("--y", arg_y, "candidate suitable family")->required();
  c_suit->add_option("--m-max", arg_mmax, "witness bound")->required();
  c_suit->callback([&] {
    auto x = io::bfamily_from_json(load_json_arg(arg_x));
    auto y = io::bfamily_from_json(load_json_arg(arg_y));
    auto r = check_suitable(x, y, arg_mmax);
    if (r.ok)
      set(true, json{{"cert", io::to_json(r.cert)}});
    else
      set(false, json{{"reason", r.reason}});
  });

  auto* c_findsuit = app.add_subcommand("find-suitable", "build a suitable family");
  c_findsuit->add_option("--x", arg_x, "independent base family")->required();
  c_findsuit->add_option("--m-max", arg_mmax, "witness bound")->required();
  c_findsuit->callback([&] {
    auto x = io::bfamily_from_json(load_json_arg(arg_x));
    auto y = find_suitable(x, arg_mmax);
    auto cert = check_suitable(x, y, arg_mmax);
    set(true, json{{"y", io::to_json(y)}, {"cert", io::to_json(cert.cert)}});
  });

  auto* c_adeq = app.add_subcommand("adequate", "search an adequacy witness");
  c_adeq->add_option("--a", arg_a, "ambient element list")->required();
  c_adeq->add_option("--pairs", arg_pairs, "array of {x, y} pairs")->required();
  c_adeq->add_option("--m", arg_m, "witness length")->required();
  c_adeq->callback([&] {
    auto a = io::bsets_from_json(load_json_arg(arg_a));
    auto pairs = io::xy_pairs_from_json(load_json_arg(arg_pairs));
    auto r = check_adequate(a, pairs, arg_m);
    if (r.ok)
      set(true, json{{"witness", io::to_json(r.witness)}});
    else
      set(false, json{{"reason", r.reason}});
  });

  auto* c_cond = app.add_subcommand("condense", "condense a witness along parts");
  c_cond->add_option("--a", arg_a, "ambient element list")->required();
  c_cond->add_option("--witness", arg_witness, "adequacy witness")->required();
  c_cond->add_option("--parts", arg_parts, "disjoint index parts")->required();
  c_cond->callback([&] {
    auto a = io::bsets_from_json(load_json_arg(arg_a));
    auto wit = io::adequacy_witness_from_json(load_json_arg(arg_witness));
    auto parts =
        load_json_arg(arg_parts).get<std::vector<std::vector<std::size_t>>>();
    auto out = condense_witness(ambient_of(a), wit, parts);
    set(true, json{{"witness", io::to_json(out)}});
  });

  auto* c_mate = app.add_subcommand(
      "matedisjuntez", "disjoint X-supports rule out ((X,Y),2)-adequacy");
  c_mate->add_option("--x", arg_x, "independent family")->required();
  c_mate->add_option("--y", arg_y, "suitable family")->required();
  c_mate->add_option("--z", arg_z, "family inside FS(Y)")->required();
  c_mate->callback([&] {
    auto x = io::bfamily_from_json(load_json_arg(arg_x));
    auto y = io::bfamily_from_json(load_json_arg(arg_y));
    auto z = io::bfamily_from_json(load_json_arg(arg_z));
    verify_disjoint_not_adequate(x, y, z);
    set(true, json::object());
  });

  auto* c_split = app.add_subcommand("sparse-split", "split FS(Z) along Zprime");
  c_split->add_option("--z", arg_z, "independent family")->required();
  c_split->add_option("--zprime", arg_y, "proper nonempty position set")->required();
  c_split->callback([&] {
    auto z = io::bfamily_from_json(load_json_arg(arg_z));
    auto zprime = io::bset_from_json(load_json_arg(arg_y));
    auto r = sparse_split(z, zprime);
    set(true, json{{"b0", io::to_json(r.b0)},
                   {"b1", io::to_json(r.b1)},
                   {"w0", io::to_json(r.w0)},
                   {"w1", io::to_json(r.w1)}});
  });

  // ---- Ramsey ----------------------------------------------------------
  std::size_t f_m = 2;
  unsigned f_colors = 2, f_max = 6;
  auto* c_folkman = app.add_subcommand(
      "folkman", "least ground size forcing a monochromatic FU");
  c_folkman->add_option("--m", f_m, "number of disjoint sets")->required();
  c_folkman->add_option("--colors", f_colors, "number of colors")->required();
  c_folkman->add_option("--max", f_max, "largest ground size to try")->required();
  c_folkman->callback([&] {
    auto r = folkman_number(f_m, f_colors, f_max);
    json data;
    data["M"] = r.value ? json(*r.value) : json(nullptr);
    data["avoiding_coloring_at_M_minus_1"] =
        r.avoiding_prev ? io::to_json(*r.avoiding_prev) : json(nullptr);
    if (!r.value) data["exhausted_at"] = f_max;
    set(r.value.has_value(), std::move(data));
  });

  auto* c_part = app.add_subcommand(
      "partition-adequate", "which cell of a partition stays adequate");
  c_part->add_option("--a", arg_a, "ambient element list")->required();
  c_part->add_option("--a0", arg_a0, "first cell of the partition")->required();
  c_part->add_option("--pairs", arg_pairs, "array of {x, y} pairs")->required();
  c_part->add_option("--m", arg_m, "target witness length")->required();
  c_part->add_option("--witness", arg_witness, "an M-witness for A")->required();
  c_part->callback([&] {
    auto a = io::bsets_from_json(load_json_arg(arg_a));
    auto a0 = io::bsets_from_json(load_json_arg(arg_a0));
    auto pairs = io::xy_pairs_from_json(load_json_arg(arg_pairs));
    auto wit = io::adequacy_witness_from_json(load_json_arg(arg_witness));
    auto [cell, out] = partition_adequate(a, a0, pairs, arg_m, wit);
    set(true, json{{"cell", cell}, {"witness", io::to_json(out)}});
  });

  // ---- construction ----------------------------------------------------
  std::size_t r_stages = 1, r_m = 1;
  std::uint64_t r_seed = 0;
  unsigned r_universe = 64;
  std::string r_targets;
  auto* c_construct = app.add_subcommand(
      "construct", "run the staged dense-set construction");
  c_construct->add_option("--stages", r_stages, "number of stages")->required();
  c_construct->add_option("--m", r_m, "witness width per stage")->required();
  c_construct->add_option("--seed", r_seed, "supply shuffle seed")->required();
  c_construct->add_option("--universe", r_universe, "universe size (max 64)");
  c_construct->add_option("--targets", r_targets,
                          "per-stage target sets (array of set lists or null)");
  c_construct->callback([&] {
    auto cfg = default_run_config(r_stages, r_m, r_seed, r_universe);
    if (!r_targets.empty()) {
      json tj = load_json_arg(r_targets);
      for (std::size_t s = 0; s < cfg.schedule.size() && s < tj.size(); ++s)
        if (!tj[s].is_null())
          cfg.schedule[s].target = io::bsets_from_json(tj[s]);
    }
    auto logs = run_stages(cfg);
    set(true, json{{"stages", io::to_json(logs)}});
  });

  auto* c_verify = app.add_subcommand("verify-log", "revalidate a recorded run");
  c_verify->add_option("log", arg_seq, "log JSON or file")->required();
  c_verify->callback([&] {
    json j = load_json_arg(arg_seq);
    if (j.is_object() && j.contains("data")) j = j["data"];
    if (j.is_object() && j.contains("stages")) j = j["stages"];
    auto logs = io::stage_logs_from_json(j);
    auto r = verify_stages(logs);
    json stages = json::array();
    for (const auto& [idx, ok] : r.stages)
      stages.push_back(json{{"stage", idx}, {"ok", ok}});
    set(r.ok, json{{"stages", stages}, {"issues", r.issues}});
  });

  auto started = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    // domain failure: the report names the violated clause
    result = outcome{false, json{{"error", e.kind()}, {"message", e.what()}}};
    exit_code = 1;
  }

  if (!result) return exit_code;
  if (!result->ok) exit_code = 1;
  double elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  json report{{"ok", result->ok},
              {"data", result->data},
              {"elapsed_ms", elapsed},
              {"version", kVersion}};
  std::cout << report.dump() << "\n";
  return exit_code;
}
