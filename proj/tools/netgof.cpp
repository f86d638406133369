// netgof: spectral goodness-of-fit tests for network data.
//
// Subcommands:
//   test         fit a named model family to data and test the fit
//   replicate    run a packaged simulation study, emitting CSV
//   select-dim   scan latent dimensions, returning the first adequate one
//   communities  latent-position k-means community detection
//   tw-table     regenerate the extreme-eigenvalue reference table
//
// Test-style commands exit 0 when the model is not rejected, 2 when it is
// rejected, and 1 on any error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netgof/experiments.hpp"
#include "netgof/gof.hpp"
#include "netgof/io.hpp"
#include "netgof/models.hpp"
#include "netgof/selection.hpp"
#include "netgof/tw1.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitReject = 2;

void write_text(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
  }
}

int finish_report(const netgof::TestReport& report, const std::string& out_path) {
  write_text(report.to_json().dump(2) + "\n", out_path);
  return report.reject ? kExitReject : kExitOk;
}

netgof::Graph load_graph(const std::string& path) {
  int dropped = 0;
  netgof::Graph g = netgof::load_edge_list(path, std::nullopt, std::nullopt, &dropped);
  if (dropped > 0)
    std::cerr << "warning: dropped " << dropped << " self loop(s) from " << path << "\n";
  return g;
}

netgof::Tw1Table load_table(const std::string& table_path) {
  if (table_path.empty()) return netgof::Tw1Table::embedded();
  return netgof::Tw1Table::load_csv(table_path);
}

// Shared flags for every test-style subcommand.
struct TestFlags {
  std::string graph_path;
  std::string out_path;
  std::string table_path;
  double alpha = 0.05;
  int B = 200;
  std::uint64_t seed = 1;
  bool asymptotic = false;
};

void add_common_flags(CLI::App* cmd, TestFlags& f, bool with_graph = true) {
  if (with_graph)
    cmd->add_option("--graph", f.graph_path, "Edge list file")->required();
  cmd->add_option("--alpha", f.alpha, "Test level in (0,1)")->capture_default_str();
  cmd->add_option("--B", f.B, "Bootstrap replicates (>= 50)")->capture_default_str();
  cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--out", f.out_path, "Also write the JSON report to this file");
  cmd->add_option("--table", f.table_path, "Reference table CSV (default: embedded)");
}

int run_undirected_test(const netgof::Graph& g, const netgof::ProbMatrix& p_hat,
                        const TestFlags& f) {
  const netgof::Tw1Table table = load_table(f.table_path);
  if (f.asymptotic)
    return finish_report(netgof::test_undirected_asymptotic(g, p_hat, f.alpha, table),
                         f.out_path);
  return finish_report(netgof::test_undirected_bootstrap(g, netgof::bernoulli_sampler(p_hat),
                                                         p_hat, f.B, f.alpha, f.seed, table),
                       f.out_path);
}

netgof::ErgmSpec parse_terms(const std::string& csv) {
  std::vector<netgof::ErgmTerm> terms;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) terms.push_back(netgof::ergm_term_from_string(cur));
  return netgof::ErgmSpec(terms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral goodness-of-fit tests for complete and partial network data"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file");

  // --- test ---
  CLI::App* test = app.add_subcommand("test", "Fit a model family and test its fit");
  test->require_subcommand(1);

  TestFlags er_f;
  CLI::App* t_er = test->add_subcommand("er", "Erdos-Renyi fit to an undirected graph");
  add_common_flags(t_er, er_f);
  t_er->add_flag("--asymptotic", er_f.asymptotic, "Skip the bootstrap correction");

  TestFlags der_f;
  std::string der_method = "bootstrap";
  CLI::App* t_der = test->add_subcommand("der", "Directed Erdos-Renyi fit");
  add_common_flags(t_der, der_f);
  t_der->add_option("--method", der_method, "bootstrap | tw | explaw")
      ->check(CLI::IsMember({"bootstrap", "tw", "explaw"}))
      ->capture_default_str();

  TestFlags beta_f;
  CLI::App* t_beta = test->add_subcommand("beta-expit", "Node-effect model, logistic link");
  add_common_flags(t_beta, beta_f);
  t_beta->add_flag("--asymptotic", beta_f.asymptotic, "Skip the bootstrap correction");

  TestFlags latent_f;
  int latent_d = 1;
  CLI::App* t_latent = test->add_subcommand("latent", "Inner-product latent space model");
  add_common_flags(t_latent, latent_f);
  t_latent->add_option("--d", latent_d, "Latent dimension")->required();

  TestFlags ergm_f;
  std::string ergm_terms = "edges,triangles";
  int ergm_p_reps = 500;
  CLI::App* t_ergm = test->add_subcommand("ergm", "Exponential random graph model");
  add_common_flags(t_ergm, ergm_f);
  t_ergm->add_option("--terms", ergm_terms, "Comma-separated statistics")->capture_default_str();
  t_ergm->add_option("--p-reps", ergm_p_reps, "Simulations used to estimate edge frequencies")
      ->capture_default_str();

  TestFlags ard_f;
  std::string ard_path;
  CLI::App* t_ard = test->add_subcommand("ard-er", "Common-tie-probability fit to ARD counts");
  add_common_flags(t_ard, ard_f, /*with_graph=*/false);
  t_ard->add_option("--ard", ard_path, "ARD counts CSV")->required();

  TestFlags model_f;
  std::string model_path;
  CLI::App* t_model = test->add_subcommand("model", "Fully specified model from a JSON file");
  add_common_flags(t_model, model_f);
  t_model->add_option("--model", model_path, "Model parameters JSON")->required();
  t_model->add_flag("--asymptotic", model_f.asymptotic, "Skip the bootstrap correction");

  // --- replicate ---
  CLI::App* repl = app.add_subcommand("replicate", "Run a packaged simulation study");
  std::string repl_id, repl_out, repl_config_json;
  std::vector<int> repl_n;
  int repl_count = 0, repl_B = 200;
  double repl_alpha = 0.05;
  std::uint64_t repl_seed = 1;
  repl->add_option("--id", repl_id, "Study id (see --list)");
  repl->add_option("--config-json", repl_config_json, "Study config as a JSON file");
  repl->add_option("--n", repl_n, "Override node counts");
  repl->add_option("--replicates", repl_count, "Replicates per parameter point");
  repl->add_option("--B", repl_B, "Bootstrap replicates")->capture_default_str();
  repl->add_option("--alpha", repl_alpha, "Test level")->capture_default_str();
  repl->add_option("--seed", repl_seed, "RNG seed")->capture_default_str();
  repl->add_option("--out", repl_out, "Write the CSV here (default: stdout only)");
  bool repl_list = false;
  repl->add_flag("--list", repl_list, "List available study ids");

  // --- select-dim ---
  CLI::App* sel = app.add_subcommand("select-dim", "Scan latent dimensions for the first fit");
  TestFlags sel_f;
  int sel_max_d = 0;
  add_common_flags(sel, sel_f);
  sel->add_option("--max-d", sel_max_d, "Largest dimension to try (default ceil(sqrt(n)), cap 12)");

  // --- communities ---
  CLI::App* comm = app.add_subcommand("communities", "k-means communities on latent positions");
  TestFlags comm_f;
  int comm_k = 0, comm_d = 0, comm_restarts = 200, comm_max_d = 0;
  std::string comm_truth;
  bool comm_scan = false;
  add_common_flags(comm, comm_f);
  comm->add_option("--k", comm_k, "Number of communities")->required();
  comm->add_option("--d", comm_d, "Latent dimension (default: chosen by select-dim scan)");
  comm->add_option("--restarts", comm_restarts, "k-means restarts")->capture_default_str();
  comm->add_option("--truth", comm_truth, "True labels CSV for misclassification scoring");
  comm->add_flag("--scan-dims", comm_scan,
                 "Emit per-dimension statistic/misclassification CSV instead of JSON");
  comm->add_option("--max-d", comm_max_d, "Largest dimension for the scan");

  // --- tw-table ---
  CLI::App* twt = app.add_subcommand("tw-table", "Regenerate the reference quantile table");
  int twt_n = 4096, twt_grid = 2241;
  std::uint64_t twt_reps = 120000, twt_seed = 20260819;
  std::string twt_out, twt_header;
  twt->add_option("--n", twt_n, "Matrix order")->capture_default_str();
  twt->add_option("--replicates", twt_reps, "Monte Carlo replicates")->capture_default_str();
  twt->add_option("--seed", twt_seed, "RNG seed")->capture_default_str();
  twt->add_option("--grid-points", twt_grid, "Quantile grid size")->capture_default_str();
  twt->add_option("--out", twt_out, "Write the table CSV here");
  twt->add_option("--emit-header", twt_header, "Also write a C++ header with the table");

  CLI11_PARSE(app, argc, argv);

  try {
    // test er
    if (t_er->parsed()) {
      const netgof::Graph g = load_graph(er_f.graph_path);
      if (g.directed) throw std::runtime_error("test er: graph is directed; use `test der`");
      return run_undirected_test(g, netgof::prob_matrix(netgof::fit_er(g), g.n()), er_f);
    }
    // test der
    if (t_der->parsed()) {
      const netgof::Graph g = load_graph(der_f.graph_path);
      if (!g.directed) throw std::runtime_error("test der: graph is undirected; use `test er`");
      const netgof::ProbMatrix p_hat = netgof::prob_matrix(netgof::fit_er(g), g.n());
      const netgof::Tw1Table table = load_table(der_f.table_path);
      if (der_method == "bootstrap")
        return finish_report(
            netgof::test_directed_bootstrap(g, netgof::bernoulli_sampler(p_hat), p_hat, der_f.B,
                                            der_f.alpha, der_f.seed, table),
            der_f.out_path);
      if (der_method == "tw")
        return finish_report(netgof::test_directed_tw(g, p_hat, der_f.alpha, table),
                             der_f.out_path);
      return finish_report(netgof::test_directed_explaw(g, p_hat, der_f.alpha), der_f.out_path);
    }
    // test beta-expit
    if (t_beta->parsed()) {
      const netgof::Graph g = load_graph(beta_f.graph_path);
      return run_undirected_test(g, netgof::prob_matrix(netgof::fit_beta_mle(g)), beta_f);
    }
    // test latent
    if (t_latent->parsed()) {
      const netgof::Graph g = load_graph(latent_f.graph_path);
      const netgof::LatentSpaceFit fit = netgof::fit_latent_space(g, latent_d);
      return run_undirected_test(g, netgof::prob_matrix(fit.params), latent_f);
    }
    // test ergm
    if (t_ergm->parsed()) {
      const netgof::Graph g = load_graph(ergm_f.graph_path);
      const netgof::ErgmParams fit = netgof::fit_ergm_mple(g, parse_terms(ergm_terms));
      const netgof::ProbMatrix p_hat = netgof::detail::clamp_probabilities(
          netgof::estimate_p_ergm(fit, g.n(), ergm_p_reps, netgof::derive_seed(ergm_f.seed, 1)),
          0.5 / static_cast<double>(ergm_p_reps));
      return run_undirected_test(g, p_hat, ergm_f);
    }
    // test ard-er
    if (t_ard->parsed()) {
      const netgof::ArdMatrix y = netgof::load_ard_csv(ard_path);
      return finish_report(netgof::test_ard_er(y, ard_f.alpha, load_table(ard_f.table_path)),
                           ard_f.out_path);
    }
    // test model
    if (t_model->parsed()) {
      const netgof::Graph g = load_graph(model_f.graph_path);
      std::ifstream mf(model_path);
      if (!mf) throw std::runtime_error("cannot open model file " + model_path);
      const netgof::ModelParams model =
          netgof::model_from_json(nlohmann::ordered_json::parse(mf));
      const netgof::ProbMatrix p_hat = netgof::model_prob_matrix(model, g.n());
      if (p_hat.directed != g.directed)
        throw std::runtime_error("test model: model/graph directedness mismatch");
      if (g.directed) {
        const netgof::Tw1Table table = load_table(model_f.table_path);
        return finish_report(
            netgof::test_directed_bootstrap(g, netgof::bernoulli_sampler(p_hat), p_hat,
                                            model_f.B, model_f.alpha, model_f.seed, table),
            model_f.out_path);
      }
      return run_undirected_test(g, p_hat, model_f);
    }
    // replicate
    if (repl->parsed()) {
      if (repl_list) {
        for (const auto& id : netgof::experiment_ids()) std::cout << id << "\n";
        return kExitOk;
      }
      netgof::ExperimentConfig cfg;
      if (!repl_config_json.empty()) {
        std::ifstream cf(repl_config_json);
        if (!cf) throw std::runtime_error("cannot open config file " + repl_config_json);
        cfg = netgof::ExperimentConfig::from_json(nlohmann::ordered_json::parse(cf));
      }
      if (!repl_id.empty()) cfg.id = repl_id;
      if (cfg.id.empty()) throw std::runtime_error("replicate: --id or --config-json required");
      if (!repl_n.empty()) cfg.n_values = repl_n;
      if (repl_count > 0) cfg.replicates = repl_count;
      if (repl->count("--B")) cfg.B = repl_B;
      if (repl->count("--alpha")) cfg.alpha = repl_alpha;
      if (repl->count("--seed")) cfg.seed = repl_seed;
      write_text(netgof::run_experiment(cfg), repl_out);
      return kExitOk;
    }
    // select-dim
    if (sel->parsed()) {
      const netgof::Graph g = load_graph(sel_f.graph_path);
      netgof::SelectDimensionOptions opts;
      opts.B = sel_f.B;
      opts.alpha = sel_f.alpha;
      const netgof::DimensionScan scan =
          netgof::select_dimension(g, opts, sel_max_d, sel_f.seed, load_table(sel_f.table_path));
      write_text(scan.to_json().dump(2) + "\n", sel_f.out_path);
      return scan.exhausted ? kExitReject : kExitOk;
    }
    // communities
    if (comm->parsed()) {
      const netgof::Graph g = load_graph(comm_f.graph_path);
      const netgof::Tw1Table table = load_table(comm_f.table_path);
      std::optional<netgof::NodeLabeling> truth;
      if (!comm_truth.empty()) truth = netgof::load_labels_csv(comm_truth);

      if (comm_scan) {
        // Per-dimension audit: test statistic, rejection flag, and (when
        // truth labels are given) the k-means misclassification rate.
        int max_d = comm_max_d > 0 ? comm_max_d : netgof::default_max_dimension(g.n());
        netgof::detail::CsvBuilder csv;
        csv.comment("per-dimension fit statistics, k=" + std::to_string(comm_k));
        csv.comment("seed=" + std::to_string(comm_f.seed));
        csv.header({"d", "t", "reject", "mis_rate"});
        for (int d = 1; d <= max_d; ++d) {
          const std::uint64_t seed_d =
              netgof::derive_seed(comm_f.seed, static_cast<std::uint64_t>(d));
          std::string t_cell = "nan", rej_cell = "nan", mis_cell = "";
          try {
            const netgof::LatentSpaceFit fit = netgof::fit_latent_space(g, d);
            const netgof::ProbMatrix p_hat = netgof::prob_matrix(fit.params);
            const netgof::TestReport rep = netgof::test_undirected_bootstrap(
                g, netgof::bernoulli_sampler(p_hat), p_hat, comm_f.B, comm_f.alpha, seed_d,
                table);
            t_cell = netgof::detail::fmt_double(rep.stat("t"));
            rej_cell = rep.reject ? "1" : "0";
            if (truth) {
              const netgof::NodeLabeling est = netgof::kmeans_communities(
                  fit.params.z, comm_k, comm_restarts, netgof::derive_seed(seed_d, 0xC0));
              mis_cell =
                  netgof::detail::fmt_double(netgof::misclassification(est, *truth)
                                                 .misclassification_rate);
            }
          } catch (const std::exception& e) {
            rej_cell = "error";
            (void)e;
          }
          csv.row({std::to_string(d), t_cell, rej_cell, mis_cell});
        }
        write_text(csv.text, comm_f.out_path);
        return kExitOk;
      }

      int d = comm_d;
      nlohmann::ordered_json j;
      if (d <= 0) {
        netgof::SelectDimensionOptions opts;
        opts.B = comm_f.B;
        opts.alpha = comm_f.alpha;
        const netgof::DimensionScan scan = netgof::select_dimension(
            g, opts, comm_max_d, netgof::derive_seed(comm_f.seed, 0xD1), table);
        if (scan.exhausted)
          throw std::runtime_error(
              "communities: every candidate dimension was rejected; pass --d explicitly");
        d = scan.d_fit;
        j["scan"] = scan.to_json();
      }
      const netgof::LatentSpaceFit fit = netgof::fit_latent_space(g, d);
      const netgof::NodeLabeling est =
          netgof::kmeans_communities(fit.params.z, comm_k, comm_restarts, comm_f.seed);
      j["d"] = d;
      j["k"] = comm_k;
      j["labels"] = est.labels;
      if (truth) {
        const netgof::ClusterEval eval = netgof::misclassification(est, *truth);
        j["misclassification_rate"] = eval.misclassification_rate;
        j["permutation"] = eval.permutation;
      }
      write_text(j.dump(2) + "\n", comm_f.out_path);
      return kExitOk;
    }
    // tw-table
    if (twt->parsed()) {
      const netgof::Tw1Table table =
          netgof::build_tw1_table(twt_n, twt_reps, twt_seed, twt_grid);
      if (!twt_out.empty()) table.save_csv(twt_out);
      if (!twt_header.empty()) {
        std::FILE* f = std::fopen(twt_header.c_str(), "w");
        if (!f) throw std::runtime_error("cannot open header file " + twt_header);
        std::fprintf(f,
                     "#pragma once\n\n"
                     "// Embedded TW1 reference table.  Generated by `netgof tw-table "
                     "--emit-header`;\n// do not edit by hand.\n\n"
                     "#include <cstdint>\n\n"
                     "namespace netgof::tw1_data {\n\n");
        std::fprintf(f, "inline constexpr std::uint64_t kSeed = %lluULL;\n",
                     static_cast<unsigned long long>(table.seed()));
        std::fprintf(f, "inline constexpr std::uint64_t kReplicates = %lluULL;\n",
                     static_cast<unsigned long long>(table.replicates()));
        std::fprintf(f, "inline constexpr int kMatrixN = %d;\n", table.matrix_n());
        std::fprintf(f, "inline constexpr double kMean = %.17g;\n", table.mean());
        std::fprintf(f, "inline constexpr double kSd = %.17g;\n", table.sd());
        std::fprintf(f, "inline constexpr int kGridSize = %d;\n\n",
                     static_cast<int>(table.grid().size()));
        std::fprintf(f, "inline constexpr double kGrid[] = {\n");
        for (double x : table.grid()) std::fprintf(f, "    %.17g,\n", x);
        std::fprintf(f, "};\n\ninline constexpr double kCdf[] = {\n");
        for (double x : table.cdf_values()) std::fprintf(f, "    %.17g,\n", x);
        std::fprintf(f, "};\n\n}  // namespace netgof::tw1_data\n");
        std::fclose(f);
      }
      std::printf("n=%d replicates=%llu mean=%.6f sd=%.6f q05=%.6f q95=%.6f\n", table.matrix_n(),
                  static_cast<unsigned long long>(table.replicates()), table.mean(), table.sd(),
                  table.quantile(0.05), table.quantile(0.95));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
