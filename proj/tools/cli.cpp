#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsslab/access_analysis.hpp"
#include "qsslab/classical_bound.hpp"
#include "qsslab/code5.hpp"
#include "qsslab/errors.hpp"
#include "qsslab/serialization.hpp"

namespace qsslab::cli {

namespace {

struct Options {
  std::string format = "table";
  std::string out_path;

  // encode
  std::optional<int> secret;
  std::vector<double> alpha;

  // report / reconstruct
  double prior_q0 = 0.5;

  // distance
  int max_weight = 3;

  // reconstruct
  std::string state_path;
  std::string subset;
  std::string mode = "classical";

  // search-classical / bound
  int n = 5;
  int k = 3;
  int max_rand = 5;
  bool no_prune = false;
  unsigned workers = 0;
  std::vector<int> sizes;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& document, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << document;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + opt.out_path + "'");
  file << document;
}

code5::QubitSecret secret_from_alpha(const std::vector<double>& alpha) {
  if (alpha.size() != 4) throw UsageError("--alpha expects re0,im0,re1,im1");
  return code5::QubitSecret({alpha[0], alpha[1]}, {alpha[2], alpha[3]});
}

int cmd_encode(const Options& opt, std::ostream& out) {
  if (opt.secret.has_value() == !opt.alpha.empty()) {
    throw UsageError("encode needs exactly one of --secret or --alpha");
  }
  const PureState psi = opt.secret ? code5::encode_classical(*opt.secret)
                                   : code5::encode_quantum(secret_from_alpha(opt.alpha));
  emit(opt, io::write_state(psi), out);
  return kExitOk;
}

int cmd_report(const Options& opt, std::ostream& out) {
  const AccessReport report = access_structure_report(SecretPrior::from_q0(opt.prior_q0));
  emit(opt, io::render(report, io::parse_output_format(opt.format)), out);
  return kExitOk;
}

int cmd_distance(const Options& opt, std::ostream& out) {
  const code5::DistanceReport report = code5::verify_distance(opt.max_weight);
  emit(opt, io::render(report, io::parse_output_format(opt.format)), out);
  const bool two_erasures_ok = !report.distance || *report.distance >= 3;
  return two_erasures_ok ? kExitOk : kExitVerificationFailure;
}

int cmd_reconstruct(const Options& opt, std::ostream& out) {
  const PureState psi = io::read_state(read_file(opt.state_path));
  const ShareSubset j = ShareSubset::parse(opt.subset);
  const DensityMatrix shares = reduced_state(psi, j);
  const SecretPrior prior = SecretPrior::from_q0(opt.prior_q0);
  const io::OutputFormat format = io::parse_output_format(opt.format);
  if (opt.mode != "classical" && opt.mode != "quantum") {
    throw UsageError("--mode must be classical or quantum");
  }

  nlohmann::ordered_json doc;
  doc["subset"] = j.members();
  std::ostringstream text;
  text << "subset " << j.to_string() << '\n';
  if (opt.mode == "classical") {
    const ClassicalReconstruction r = reconstruct_classical(j, shares, prior);
    doc["guess"] = r.guess;
    doc["success_probability"] = r.success_probability;
    doc["support_weight"] = r.support_weight;
    text << "guess " << r.guess << '\n'
         << "success_probability " << io::format_number(r.success_probability) << '\n'
         << "support_weight " << io::format_number(r.support_weight) << '\n';
  } else {
    std::optional<code5::QubitSecret> secret;
    if (!opt.alpha.empty()) secret = secret_from_alpha(opt.alpha);
    const QuantumReconstruction r = reconstruct_quantum(j, shares, secret);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    text << "recovered\n";
    for (std::size_t a = 0; a < 2; ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t b = 0; b < 2; ++b) {
        const Complex z = r.recovered(a, b);
        row.push_back({z.real(), z.imag()});
        text << "  " << io::format_number(z.real()) << (z.imag() < 0 ? " - " : " + ")
             << io::format_number(std::abs(z.imag())) << "i";
      }
      text << '\n';
      rows.push_back(std::move(row));
    }
    doc["recovered"] = std::move(rows);
    if (r.fidelity) {
      doc["fidelity"] = *r.fidelity;
      text << "fidelity " << io::format_number(*r.fidelity) << '\n';
    }
  }
  emit(opt, format == io::OutputFormat::Json ? doc.dump(2) + "\n" : text.str(), out);
  return kExitOk;
}

int cmd_search(const Options& opt, std::ostream& out) {
  classical::SearchOptions search_opts;
  search_opts.prune = !opt.no_prune;
  search_opts.workers = opt.workers;
  const auto report = classical::search_linear_schemes(opt.n, opt.k, opt.max_rand, search_opts);
  emit(opt, io::render(report, io::parse_output_format(opt.format)), out);
  return kExitOk;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  classical::ThresholdParams params{opt.n, opt.k, opt.sizes};
  if (params.share_sizes.empty()) params.share_sizes.assign(static_cast<std::size_t>(opt.n), 2);
  const auto report = classical::check_bound(params);
  emit(opt, io::render(report, params, io::parse_output_format(opt.format)), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of the (3,5) qubit secret sharing scheme built on the 5-qubit code"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_format = [&](CLI::App* sub, const std::string& def) {
    opt.format = def;
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--out", opt.out_path, "Write the document to this file instead of stdout");
  };

  auto* encode = app.add_subcommand("encode", "Write the encoded 5-qubit state to a state file");
  encode->add_option("--secret", opt.secret, "Classical secret bit")->check(CLI::Range(0, 1));
  encode->add_option("--alpha", opt.alpha, "Quantum secret amplitudes re0,im0,re1,im1")
      ->delimiter(',')
      ->expected(4);
  encode->add_option("--out", opt.out_path, "Output path (default stdout)");

  auto* report = app.add_subcommand("report", "Classify all 31 share subsets");
  report->add_option("--prior", opt.prior_q0, "Probability q0 of secret 0 (q1 = 1 - q0)")
      ->check(CLI::Range(0.0, 1.0));

  auto* distance = app.add_subcommand("distance", "Knill-Laflamme distance certificate");
  distance->add_option("--max-weight", opt.max_weight, "Largest Pauli weight to check")
      ->check(CLI::Range(1, 5));

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct a secret from a share subset");
  reconstruct->add_option("--state", opt.state_path, "State file written by 'encode'")->required();
  reconstruct->add_option("--subset", opt.subset, "Participants, e.g. 1,2,3")->required();
  reconstruct->add_option("--mode", opt.mode, "classical or quantum")
      ->check(CLI::IsMember({"classical", "quantum"}));
  reconstruct->add_option("--prior", opt.prior_q0, "Probability q0 of secret 0")
      ->check(CLI::Range(0.0, 1.0));
  reconstruct->add_option("--alpha", opt.alpha, "Secret amplitudes re0,im0,re1,im1 for fidelity")
      ->delimiter(',')
      ->expected(4);

  auto* search = app.add_subcommand("search-classical",
                                    "Exhaustive search for linear GF(2) threshold schemes");
  search->add_option("--n", opt.n, "Participants")->check(CLI::Range(1, 5));
  search->add_option("--k", opt.k, "Threshold")->check(CLI::Range(1, 5));
  search->add_option("--max-rand", opt.max_rand, "Largest number of randomness bits")
      ->check(CLI::Range(0, 5));
  search->add_flag("--no-prune", opt.no_prune, "Enumerate without pruning");
  search->add_option("--workers", opt.workers, "Worker threads (0 = hardware)");

  auto* bound = app.add_subcommand("bound", "Compare mean share size against n - k + 2");
  bound->add_option("--n", opt.n, "Participants")->check(CLI::PositiveNumber);
  bound->add_option("--k", opt.k, "Threshold")->check(CLI::PositiveNumber);
  bound->add_option("--sizes", opt.sizes, "Share alphabet sizes (default all 2)")->delimiter(',');

  add_format(report, "table");
  add_format(distance, "table");
  add_format(reconstruct, "table");
  add_format(search, "table");
  add_format(bound, "table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(opt, out);
    if (*report) return cmd_report(opt, out);
    if (*distance) return cmd_distance(opt, out);
    if (*reconstruct) return cmd_reconstruct(opt, out);
    if (*search) return cmd_search(opt, out);
    if (*bound) return cmd_bound(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::FormatError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IndeterminateError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace qsslab::cli
