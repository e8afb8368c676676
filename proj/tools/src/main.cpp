// Command line front end: parse inputs, dispatch to the library, render
// decompositions, certificates, and census tables.
//
// Exit codes: 0 success, 1 domain errors (including failed verification),
// 2 usage errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altdiam/census.hpp"
#include "altdiam/decompose.hpp"
#include "altdiam/io.hpp"
#include "altdiam/linear.hpp"
#include "altdiam/multi.hpp"
#include "altdiam/poset.hpp"
#include "altdiam/sparse.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw altdiam::Error(altdiam::ErrorCode::InvalidInput, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

bool parse_int_list(const std::string& text, std::vector<int>& out) {
  out.clear();
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) return false;
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

const std::vector<std::string> kStandardWords = {"1", "L", "R", "LR", "RL", "LRL", "RLR"};

// --- human-readable rendering ---

void print_decomposition(std::ostream& out, const altdiam::Decomposition& d) {
  out << "order " << d.order() << '\n';
  for (std::size_t i = 0; i < d.stages.size(); ++i) {
    const auto& s = d.stages[i];
    const bool left = s.kind == altdiam::Letter::L;
    out << "stage " << (i + 1) << " kind " << altdiam::letter_char(s.kind)
        << (left ? " (one row permutation per column)" : " (one column permutation per row)")
        << '\n';
    for (std::size_t j = 0; j < s.perms.size(); ++j) {
      out << "  " << (left ? "column " : "row ") << j << ':';
      for (int v : s.perms[j]) out << ' ' << v;
      out << '\n';
    }
  }
}

void print_multi_stages(std::ostream& out, const std::vector<int>& dims,
                        const std::vector<altdiam::MultiStage>& stages) {
  out << "dims";
  for (int d : dims) out << ' ' << d;
  out << '\n';
  for (std::size_t i = 0; i < stages.size(); ++i) {
    out << "stage " << (i + 1) << " axis " << stages[i].axis << '\n';
    for (std::size_t j = 0; j < stages[i].perms.size(); ++j) {
      out << "  assignment " << j << ':';
      for (int v : stages[i].perms[j]) out << ' ' << v;
      out << '\n';
    }
  }
}

void print_matrix(std::ostream& out, const altdiam::FieldMatrix& a) {
  for (int r = 0; r < a.rows(); ++r) {
    out << " ";
    for (int c = 0; c < a.cols(); ++c) out << ' ' << a.at(r, c);
    out << '\n';
  }
}

void print_census(std::ostream& out, const altdiam::CensusReport& r) {
  out << "grid " << r.m << " x " << r.n << ": " << r.total << " permutations of "
      << (r.m * r.n) << " cells\n";
  const int size_w = static_cast<int>(std::max<std::size_t>(std::to_string(r.total).size(), 4));
  out << std::left << std::setw(6) << "word" << std::right << std::setw(size_w) << "size" << '\n';
  for (const auto& [word, size] : r.sizes)
    out << std::left << std::setw(6) << word << std::right << std::setw(size_w) << size << '\n';
  out << "intersection LR ^ RL: " << r.intersection_lr_rl << '\n';
  out << "hierarchy (sigma / pi / delta):\n";
  for (const auto& row : r.hierarchy_rows)
    out << "  level " << row.level << ": " << row.sigma_size << " / " << row.pi_size << " / "
        << row.delta_size << '\n';
  if (r.collapse_level > 0)
    out << "collapse at level " << r.collapse_level << '\n';
  else
    out << "no collapse through level 6\n";
}

// --- subcommand implementations ---

int run_decompose(const std::string& input, const std::string& order_name, bool json) {
  const auto order =
      order_name == "lrl" ? altdiam::StageOrder::LRL : altdiam::StageOrder::RLR;
  const auto p = altdiam::parse_grid_permutation(read_input(input));
  const auto d = altdiam::decompose_two(p, order);
  if (json)
    std::cout << altdiam::decomposition_to_json(d) << '\n';
  else
    print_decomposition(std::cout, d);
  return 0;
}

int run_decompose_multi(const std::string& input, bool json) {
  const auto p = altdiam::parse_multi_permutation(read_input(input));
  auto stages = altdiam::decompose_multi(p);
  if (json)
    std::cout << altdiam::multi_decomposition_to_json({p.dims(), std::move(stages)}) << '\n';
  else
    print_multi_stages(std::cout, p.dims(), stages);
  return 0;
}

int run_decompose_sparse(const std::string& input, const std::string& order_name, bool json) {
  const auto order =
      order_name == "lrl" ? altdiam::StageOrder::LRL : altdiam::StageOrder::RLR;
  const auto p = altdiam::parse_sparse_permutation(read_input(input));
  const auto d = altdiam::decompose_finite_support(p, order);
  if (json) {
    std::cout << altdiam::sparse_decomposition_to_json(d) << '\n';
  } else {
    std::cout << "bounding grid " << d.m << " x " << d.n << '\n';
    print_decomposition(std::cout, d.decomposition);
  }
  return 0;
}

int run_decompose_linear(const std::string& input, altdiam::BlockSplit split,
                         const std::string& order_name, bool json) {
  const auto a = altdiam::parse_field_matrix(read_input(input));
  const auto d = order_name == "rlr" ? altdiam::decompose_linear_rlr(a, split)
                                     : altdiam::decompose_linear(a, split);
  if (json) {
    std::cout << altdiam::linear_decomposition_to_json(d) << '\n';
  } else {
    std::cout << "split " << d.split.m << " + " << d.split.n << " over F_"
              << a.field().p() << '\n';
    for (std::size_t i = 0; i < d.stages.size(); ++i) {
      std::cout << "stage " << (i + 1) << " kind "
                << altdiam::letter_char(d.stages[i].kind) << '\n';
      print_matrix(std::cout, d.stages[i].matrix);
    }
  }
  return 0;
}

int run_classify(const std::string& input, const std::string& split_text, bool json) {
  const std::string text = read_input(input);
  if (!split_text.empty()) {
    std::vector<int> parts;
    if (!parse_int_list(split_text, parts) || parts.size() != 2) {
      std::cerr << "error: --split expects m,n\n";
      return 2;
    }
    const auto a = altdiam::parse_field_matrix(text);
    const altdiam::BlockSplit split{parts[0], parts[1]};
    const auto kind = altdiam::linear_stage_kind(a, split);
    if (json) {
      ordered_json j;
      j["p"] = a.field().p();
      j["split"] = ordered_json{{"m", split.m}, {"n", split.n}};
      j["kind"] = altdiam::stage_kind_name(kind);
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "matrix " << a.rows() << " x " << a.cols() << " over F_" << a.field().p()
                << ", split " << split.m << " + " << split.n << '\n'
                << "kind: " << altdiam::stage_kind_name(kind) << '\n';
    }
    return 0;
  }

  const auto p = altdiam::parse_grid_permutation(text);
  const auto kind = altdiam::stage_kind(p);
  if (json) {
    ordered_json j;
    j["m"] = p.m();
    j["n"] = p.n();
    j["kind"] = altdiam::stage_kind_name(kind);
    ordered_json members;
    for (const auto& w : kStandardWords)
      members[w] = altdiam::in_word(p, altdiam::AlternationWord::parse(w));
    j["in"] = std::move(members);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "grid " << p.m() << " x " << p.n() << '\n'
              << "kind: " << altdiam::stage_kind_name(kind) << '\n';
    for (const auto& w : kStandardWords)
      std::cout << "in " << w << ": "
                << (altdiam::in_word(p, altdiam::AlternationWord::parse(w)) ? "yes" : "no")
                << '\n';
  }
  return 0;
}

int report_verify(bool ok, const std::string& reason,
                  const std::optional<std::vector<int>>& cell, bool json) {
  if (json) {
    ordered_json j;
    j["ok"] = ok;
    j["reason"] = reason;
    j["failing_cell"] = cell ? ordered_json(*cell) : ordered_json(nullptr);
    std::cout << j.dump() << '\n';
  } else if (ok) {
    std::cout << "OK\n";
  } else {
    std::cout << "mismatch: " << reason;
    if (cell) {
      std::cout << " at (";
      for (std::size_t i = 0; i < cell->size(); ++i)
        std::cout << (i ? ", " : "") << (*cell)[i];
      std::cout << ")";
    }
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}

int verify_linear(const std::string& decomp_text, const std::string& target_text, bool json) {
  const auto d = altdiam::linear_decomposition_from_json(decomp_text);
  const auto target = altdiam::parse_field_matrix(target_text);
  for (std::size_t i = 0; i < d.stages.size(); ++i) {
    const auto kind = altdiam::linear_stage_kind(d.stages[i].matrix, d.split);
    const auto want = d.stages[i].kind;
    if (kind != altdiam::StageKind::Both &&
        altdiam::stage_kind_name(kind) != std::string(1, altdiam::letter_char(want)))
      return report_verify(false,
                           "stage " + std::to_string(i + 1) + " is not a valid " +
                               altdiam::letter_char(want) + std::string(" stage"),
                           std::nullopt, json);
    if (i > 0 && d.stages[i].kind == d.stages[i - 1].kind)
      return report_verify(false, "stages " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                      " have the same kind",
                           std::nullopt, json);
  }
  altdiam::FieldMatrix prod = d.stages.front().matrix;
  for (std::size_t i = 1; i < d.stages.size(); ++i)
    prod = altdiam::multiply(prod, d.stages[i].matrix);
  if (prod.rows() != target.rows() || prod.cols() != target.cols() ||
      prod.field().p() != target.field().p())
    return report_verify(false, "stage product shape or field differs from the target",
                         std::nullopt, json);
  for (int r = 0; r < prod.rows(); ++r)
    for (int c = 0; c < prod.cols(); ++c)
      if (prod.at(r, c) != target.at(r, c))
        return report_verify(false,
                             "stage product has " + std::to_string(prod.at(r, c)) +
                                 ", target has " + std::to_string(target.at(r, c)),
                             std::vector<int>{r, c}, json);
  return report_verify(true, "", std::nullopt, json);
}

int run_verify(const std::string& decomp_path, const std::string& target_path, bool json) {
  const std::string decomp_text = read_input(decomp_path);
  const std::string target_text = read_input(target_path);

  const auto doc = nlohmann::json::parse(decomp_text, nullptr, false);
  if (!doc.is_object())
    throw altdiam::Error(altdiam::ErrorCode::InvalidInput,
                         "the decomposition input must be a JSON object");

  if (doc.contains("split")) return verify_linear(decomp_text, target_text, json);

  if (doc.contains("dims")) {
    const auto d = altdiam::multi_decomposition_from_json(decomp_text);
    const auto target = altdiam::parse_multi_permutation(target_text);
    if (d.dims != target.dims())
      return report_verify(false, "decomposition dims differ from the target's", std::nullopt,
                           json);
    const auto result = altdiam::verify_multi_decomposition(d.stages, target);
    return report_verify(result.ok, result.reason, result.failing_cell, json);
  }

  if (doc.contains("m")) {  // finite-support decomposition with a bounding grid
    const auto d = altdiam::sparse_decomposition_from_json(decomp_text);
    const auto target = altdiam::parse_sparse_permutation(target_text);
    if (d.m == 0)
      return report_verify(target.empty(), target.empty() ? "" : "target has support points",
                           std::nullopt, json);
    altdiam::GridPermutation embedded = altdiam::GridPermutation::identity(d.m, d.n);
    try {
      embedded = altdiam::embed_in_grid(target, d.m, d.n);
    } catch (const altdiam::Error& e) {
      if (e.code() != altdiam::ErrorCode::RangeViolation) throw;
      return report_verify(false, "target support leaves the bounding grid", std::nullopt, json);
    }
    const auto result = altdiam::verify_decomposition(d.decomposition, embedded);
    std::optional<std::vector<int>> cell;
    if (result.failing_cell) cell = {result.failing_cell->a, result.failing_cell->b};
    return report_verify(result.ok, result.reason, cell, json);
  }

  const auto d = altdiam::decomposition_from_json(decomp_text);
  const auto target = altdiam::parse_grid_permutation(target_text);
  const auto result = altdiam::verify_decomposition(d, target);
  std::optional<std::vector<int>> cell;
  if (result.failing_cell) cell = {result.failing_cell->a, result.failing_cell->b};
  return report_verify(result.ok, result.reason, cell, json);
}

int run_census(int m, int n, int threads, bool json, bool csv) {
  const auto report = altdiam::census(m, n, threads);
  if (json)
    std::cout << altdiam::census_report_to_json(report) << '\n';
  else if (csv)
    std::cout << altdiam::census_report_to_csv(report);
  else
    print_census(std::cout, report);
  return 0;
}

int run_lower_bound(const std::string& dims_text, const std::string& schedule_text, bool json) {
  std::vector<int> dims, schedule;
  if (!parse_int_list(dims_text, dims)) {
    std::cerr << "error: --dims expects a comma separated list, e.g. 2,2,2\n";
    return 2;
  }
  if (!parse_int_list(schedule_text, schedule)) {
    std::cerr << "error: --schedule expects a comma separated list, e.g. 3,2,1,2,3\n";
    return 2;
  }
  const auto report = altdiam::lower_bound_check(dims, schedule);
  if (json) {
    std::cout << altdiam::lower_bound_report_to_json(report) << '\n';
  } else {
    std::cout << "universe: " << report.universe << '\n'
              << "product size: " << report.product_size << '\n'
              << "covered: " << (report.covered ? "yes" : "no") << '\n';
    if (report.witness_table) {
      std::cout << "witness outside the product (flat image table):";
      for (int v : *report.witness_table) std::cout << ' ' << v;
      std::cout << '\n';
    }
  }
  return 0;
}

int run_poset(const altdiam::FinitePoset& p, bool json) {
  const auto auts = altdiam::automorphisms(p);
  const auto report = altdiam::flip_generated(p);
  if (json) {
    std::cout << altdiam::flip_report_to_json(p.size(), auts.size(), report) << '\n';
  } else {
    std::cout << "elements: " << p.size() << '\n'
              << "poset automorphisms: " << auts.size() << '\n'
              << "product automorphisms: " << report.aut_size << '\n'
              << "left stage group: " << report.left_size << '\n'
              << "right stage group: " << report.right_size << '\n'
              << "closure of the stage groups: " << report.closure_size << '\n'
              << "flip generated: " << (report.flip_in_closure ? "yes" : "no") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating row/column stage factorizations over product sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "altdiam 1.0.0");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "factor a grid permutation into 3 stages");
  std::string dec_input = "-";
  std::string dec_order = "rlr";
  bool dec_json = false;
  decompose->add_option("input", dec_input, "permutation file or - for stdin");
  decompose->add_option("--order", dec_order, "stage order")
      ->check(CLI::IsMember({"rlr", "lrl"}));
  decompose->add_flag("--json", dec_json, "emit JSON");

  // decompose-multi
  auto* dmulti = app.add_subcommand("decompose-multi",
                                    "factor a k-axis permutation into 2k-1 stages");
  std::string dm_input = "-";
  bool dm_json = false;
  dmulti->add_option("input", dm_input, "permutation file or - for stdin");
  dmulti->add_flag("--json", dm_json, "emit JSON");

  // decompose-sparse
  auto* dsparse = app.add_subcommand("decompose-sparse",
                                     "factor a finite-support permutation of N x N");
  std::string ds_input = "-";
  std::string ds_order = "rlr";
  bool ds_json = false;
  dsparse->add_option("input", ds_input, "support file or - for stdin");
  dsparse->add_option("--order", ds_order, "stage order")
      ->check(CLI::IsMember({"rlr", "lrl"}));
  dsparse->add_flag("--json", ds_json, "emit JSON");

  // decompose-linear
  auto* dlinear = app.add_subcommand("decompose-linear",
                                     "factor an invertible matrix into 3 block stages");
  std::string dl_input = "-";
  std::string dl_split;
  std::string dl_order = "lrl";
  bool dl_json = false;
  dlinear->add_option("input", dl_input, "matrix file or - for stdin");
  dlinear->add_option("--split", dl_split, "block split m,n")->required();
  dlinear->add_option("--order", dl_order, "stage order")
      ->check(CLI::IsMember({"lrl", "rlr"}));
  dlinear->add_flag("--json", dl_json, "emit JSON");

  // classify
  auto* classify = app.add_subcommand("classify",
                                      "stage kind and word membership of a permutation");
  std::string cl_input = "-";
  std::string cl_split;
  bool cl_json = false;
  classify->add_option("input", cl_input, "permutation (or matrix) file or - for stdin");
  classify->add_option("--split", cl_split, "classify a matrix against this block split m,n");
  classify->add_flag("--json", cl_json, "emit JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "check a decomposition against a target");
  std::string v_decomp, v_target;
  bool v_json = false;
  verify->add_option("decomposition", v_decomp, "decomposition JSON file or - for stdin")
      ->required();
  verify->add_option("target", v_target, "target permutation or matrix file")->required();
  verify->add_flag("--json", v_json, "emit JSON");

  // census
  auto* census_cmd = app.add_subcommand("census", "exhaustive word sizes and hierarchy");
  int c_m = 0, c_n = 0, c_threads = 1;
  bool c_json = false, c_csv = false;
  census_cmd->add_option("m", c_m, "rows")->required();
  census_cmd->add_option("n", c_n, "columns")->required();
  census_cmd->add_option("--threads", c_threads, "worker threads for the membership sweep")
      ->envname("ALTDIAM_THREADS");
  auto* c_json_flag = census_cmd->add_flag("--json", c_json, "emit JSON");
  census_cmd->add_flag("--csv", c_csv, "emit one row per word")->excludes(c_json_flag);

  // lower-bound
  auto* lower = app.add_subcommand("lower-bound",
                                   "does a stage schedule cover the full group?");
  std::string lb_dims, lb_schedule;
  bool lb_json = false;
  lower->add_option("--dims", lb_dims, "axis sizes, e.g. 2,2,2")->required();
  lower->add_option("--schedule", lb_schedule, "stage axes, e.g. 3,2,1,2,3")->required();
  lower->add_flag("--json", lb_json, "emit JSON");

  // poset
  auto* poset = app.add_subcommand("poset", "stage groups and flip generation over a poset");
  std::string po_input;
  int po_chain = 0, po_antichain = 0;
  bool po_diamond = false, po_json = false;
  auto* po_file = poset->add_option("input", po_input, "poset file or - for stdin");
  auto* po_chain_opt = poset->add_option("--chain", po_chain, "chain on N elements");
  auto* po_anti_opt = poset->add_option("--antichain", po_antichain, "antichain on N elements");
  auto* po_diamond_opt = poset->add_flag("--diamond", po_diamond, "the four element diamond");
  po_chain_opt->excludes(po_anti_opt)->excludes(po_diamond_opt)->excludes(po_file);
  po_anti_opt->excludes(po_diamond_opt)->excludes(po_file);
  po_diamond_opt->excludes(po_file);
  poset->add_flag("--json", po_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(decompose)) return run_decompose(dec_input, dec_order, dec_json);
    if (app.got_subcommand(dmulti)) return run_decompose_multi(dm_input, dm_json);
    if (app.got_subcommand(dsparse)) return run_decompose_sparse(ds_input, ds_order, ds_json);
    if (app.got_subcommand(dlinear)) {
      std::vector<int> parts;
      if (!parse_int_list(dl_split, parts) || parts.size() != 2) {
        std::cerr << "error: --split expects m,n\n";
        return 2;
      }
      return run_decompose_linear(dl_input, altdiam::BlockSplit{parts[0], parts[1]}, dl_order,
                                  dl_json);
    }
    if (app.got_subcommand(classify)) return run_classify(cl_input, cl_split, cl_json);
    if (app.got_subcommand(verify)) return run_verify(v_decomp, v_target, v_json);
    if (app.got_subcommand(census_cmd)) return run_census(c_m, c_n, c_threads, c_json, c_csv);
    if (app.got_subcommand(lower)) return run_lower_bound(lb_dims, lb_schedule, lb_json);
    if (app.got_subcommand(poset)) {
      altdiam::FinitePoset p = altdiam::FinitePoset::antichain(1);
      if (po_chain_opt->count()) {
        p = altdiam::FinitePoset::chain(po_chain);
      } else if (po_anti_opt->count()) {
        p = altdiam::FinitePoset::antichain(po_antichain);
      } else if (po_diamond) {
        p = altdiam::FinitePoset::diamond();
      } else if (po_file->count()) {
        p = altdiam::poset_from_text(read_input(po_input));
      } else {
        std::cerr << "error: give a poset file or one of --chain, --antichain, --diamond\n";
        return 2;
      }
      return run_poset(p, po_json);
    }
  } catch (const altdiam::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
