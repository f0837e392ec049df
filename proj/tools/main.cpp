// kmtext command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "kmtext/cli/commands.hpp"

namespace {

using namespace kmtext::cli;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kmtext: review text mining with a content-addressed knowledge store"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kmtext 1.0.0");

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Extract review blocks from HTML/text files into a corpus file");
  ingest_cmd->add_option("input_dir", ingest.input_dir, "Directory of .html/.htm/.txt files")->required();
  ingest_cmd->add_option("-o,--out", ingest.out_path, "Corpus JSON to write")->required();
  ingest_cmd->add_option("--class", ingest.class_name, "Class attribute of the review container")
      ->capture_default_str();
  ingest_cmd->add_option("--id-prefix", ingest.id_prefix, "Document id prefix")->capture_default_str();

  AnalyzeOptions analyze;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> topics, iterations;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the analytics pipeline and write results files");
  analyze_cmd->add_option("corpus", analyze.corpus_path, "Corpus JSON from ingest")->required();
  analyze_cmd->add_option("-c,--config", analyze.config_path, "Run configuration JSON")->required();
  analyze_cmd->add_option("-o,--out", analyze.out_dir, "Results directory")->required();
  analyze_cmd->add_option("--seed", seed, "LDA seed (overrides config; default 42)");
  analyze_cmd->add_option("--topics", topics, "LDA topic count (overrides config; default 2)");
  analyze_cmd->add_option("--iterations", iterations, "LDA Gibbs sweeps (overrides config; default 200)");

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Render SVG charts from a results directory");
  report_cmd->add_option("results_dir", report.results_dir, "Directory written by analyze")->required();
  report_cmd->add_option("-o,--out", report.out_dir, "Chart output directory")->required();

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Store results as knowledge records and emit outbox messages");
  export_cmd->add_option("results_dir", exp.results_dir, "Directory written by analyze")->required();
  export_cmd->add_option("--store", exp.store_path, "Append-only record store (JSON lines)")->required();
  export_cmd->add_option("--outbox", exp.outbox_dir, "Outbox directory for messages")->required();

  SearchOptions search;
  std::optional<std::string> search_config;
  auto* search_cmd = app.add_subcommand("search", "Rank corpus documents against a free-text query");
  search_cmd->add_option("corpus", search.corpus_path, "Corpus JSON from ingest")->required();
  search_cmd->add_option("query", search.query, "Query text")->required();
  search_cmd->add_option("-k,--top-k", search.top_k, "Maximum hits to print")->capture_default_str();
  search_cmd->add_option("-c,--config", search_config, "Run configuration JSON (pipeline section only)");

  ClassifyOptions classify;
  std::optional<std::string> classify_config;
  auto* classify_cmd = app.add_subcommand("classify", "Train naive Bayes on labeled documents and classify a target");
  classify_cmd->add_option("corpus", classify.corpus_path, "Corpus JSON from ingest")->required();
  classify_cmd->add_option("-l,--labels", classify.labels_path, "CSV of doc_id,label (header optional)")->required();
  auto* doc_opt = classify_cmd->add_option("--doc", classify.doc_id, "Classify this corpus document");
  auto* text_opt = classify_cmd->add_option("--text", classify.text, "Classify this text");
  doc_opt->excludes(text_opt);
  classify_cmd->add_option("--alpha", classify.alpha, "Laplace smoothing constant")->capture_default_str();
  classify_cmd->add_option("-c,--config", classify_config, "Run configuration JSON (pipeline section only)");

  std::string verify_store;
  auto* verify_cmd = app.add_subcommand("verify", "Re-hash every record in a store and check its id");
  verify_cmd->add_option("store", verify_store, "Record store (JSON lines)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kmtext: error: usage: " << e.what() << "\n";
    return kUsageError;
  }

  const Streams io{std::cout, std::cerr};
  if (*ingest_cmd) return cmd_ingest(ingest, io);
  if (*analyze_cmd) {
    analyze.seed = seed;
    analyze.topics = topics;
    analyze.iterations = iterations;
    return cmd_analyze(analyze, io);
  }
  if (*report_cmd) return cmd_report(report, io);
  if (*export_cmd) return cmd_export(exp, io);
  if (*search_cmd) {
    if (search_config) search.config_path = *search_config;
    return cmd_search(search, io);
  }
  if (*classify_cmd) {
    if (classify_config) classify.config_path = *classify_config;
    return cmd_classify(classify, io);
  }
  if (*verify_cmd) return cmd_verify(verify_store, io);
  return kUsageError;
}
