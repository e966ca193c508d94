#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kodag/chains.hpp"
#include "kodag/errors.hpp"
#include "kodag/incidence.hpp"
#include "kodag/poset.hpp"
#include "kodag/render.hpp"
#include "kodag/sequence.hpp"
#include "kodag/serialize.hpp"
#include "kodag/verify.hpp"

namespace {

using namespace kodag;

enum ExitCode {
    kOk = 0,
    kVerifyFailed = 1,
    kConfig = 2,
    kDomain = 3,
    kConjecture = 4,
    kCap = 5,
};

struct CommonOpts {
    std::string seq_spec;
    std::string poset_path;
    int levels = 0;
    std::string format = "json"; // json | csv | ascii
    std::string out_path;
};

void add_input_options(CLI::App* cmd, CommonOpts& opts, bool poset_allowed) {
    cmd->add_option("--seq", opts.seq_spec,
                    "sequence spec: nat | fib | fib+root | gauss:Q | const:C "
                    "| list:a,b,...");
    cmd->add_option("--levels", opts.levels, "number of levels");
    if (poset_allowed) {
        cmd->add_option("--poset", opts.poset_path, "poset JSON document");
    }
}

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: json | csv | ascii")
        ->check(CLI::IsMember({"json", "csv", "ascii"}));
    cmd->add_option("--out", opts.out_path, "write output to a file");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw ConfigError("cannot write file '" + opts.out_path + "'");
    out << payload;
}

// Exactly one input source: a sequence spec with levels, or a poset file.
GradedPoset resolve_poset(const CommonOpts& opts) {
    const bool have_seq = !opts.seq_spec.empty();
    const bool have_file = !opts.poset_path.empty();
    if (have_seq == have_file) {
        throw ConfigError("exactly one of --seq and --poset is required");
    }
    if (have_file) return poset_from_json(read_file(opts.poset_path));
    if (opts.levels < 1) throw ConfigError("--levels must be >= 1");
    return GradedPoset::cobweb(Sequence::parse(opts.seq_spec), opts.levels);
}

Sequence resolve_sequence(const CommonOpts& opts) {
    if (opts.seq_spec.empty()) throw ConfigError("--seq is required");
    return Sequence::parse(opts.seq_spec);
}

std::string format_matrix(const CommonOpts& opts, const IncidenceMatrix& m) {
    if (opts.format == "csv") return matrix_to_csv(m);
    if (opts.format == "ascii") return render_matrix_ascii(m);
    return matrix_to_json(m);
}

int run_matrix_command(const std::string& which, const CommonOpts& opts,
                       const std::string& method, bool eta_inv) {
    GradedPoset p = resolve_poset(opts);
    if (which == "zeta") {
        emit(opts, format_matrix(opts, zeta_closure(p)));
        return kOk;
    }
    if (which == "max") {
        emit(opts, format_matrix(opts, max_matrix(p)));
        return kOk;
    }
    if (which == "eta") {
        emit(opts, format_matrix(opts, eta_inv ? eta_inverse(p)
                                               : eta_matrix(p)));
        return kOk;
    }
    // mobius
    if (method == "invert") {
        emit(opts, format_matrix(opts, mobius_inverse(zeta_closure(p))));
        return kOk;
    }
    if (method == "recurrence") {
        emit(opts, format_matrix(opts, mobius_recurrence(p)));
        return kOk;
    }
    if (method != "closed") {
        throw ConfigError("unknown mobius method '" + method + "'");
    }
    ClosedFormResult r = mobius_closed_form(
        p, p.is_cobweb() ? ClosedFormMode::Strict : ClosedFormMode::Conjecture);
    emit(opts, format_matrix(opts, r.matrix));
    if (!r.agrees_with_inversion) {
        const LevelIndex& idx = p.index();
        std::cerr << "conjecture: closed-form mu disagrees with inversion at "
                     "entry ("
                  << r.first_mismatch->row + 1 << ","
                  << r.first_mismatch->col + 1 << ") block ("
                  << idx.level_of(r.first_mismatch->row) << ","
                  << idx.level_of(r.first_mismatch->col) << "): exact "
                  << r.exact_value.str() << " vs candidate "
                  << r.candidate_value.str() << "\n";
        return kConjecture;
    }
    return kOk;
}

int run_chains(const CommonOpts& opts, int from, int to, bool enumerate,
               std::int64_t cap) {
    GradedPoset p = resolve_poset(opts);
    if (enumerate) {
        ChainSet cs = enumerate_layer_chains(p, from, to, cap);
        emit(opts, chainset_to_json(cs));
        return kOk;
    }
    BigInt count = layer_chain_count(p, from, to);
    if (opts.format == "ascii" || opts.format == "csv") {
        emit(opts, count.str() + "\n");
    } else {
        emit(opts, chain_count_to_json(from, to, count));
    }
    return kOk;
}

int run_verify(const verify::Options& vopts, const std::string& suite) {
    std::vector<verify::CheckResult> results = verify::run_suite(suite, vopts);
    for (const verify::CheckResult& r : results) {
        std::cout << verify::status_label(r.status) << " " << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
    }
    return verify::all_passed(results) ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "kodag — exact incidence algebra of F-denominated graded posets.\n"
        "Exit codes: 0 ok, 1 verification failure, 2 bad configuration,\n"
        "3 domain error, 4 closed-form mismatch (matrix still emitted),\n"
        "5 enumeration cap exceeded."};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string method = "invert";
    bool eta_inv = false;
    int from = 0, to = 0, n_arg = 0, k_arg = 0, r_arg = 0, s_arg = 0;
    bool enumerate = false;
    std::int64_t cap = kDefaultChainCap;
    int width = 0;
    std::string density_text = "1";
    std::uint64_t seed = 0;
    bool allow_mute = false;
    std::string suite = "all";
    int random_count = 0;

    CLI::App* zeta = app.add_subcommand("zeta", "emit the zeta matrix");
    add_input_options(zeta, opts, true);
    add_output_options(zeta, opts);

    CLI::App* mobius = app.add_subcommand("mobius", "emit the Mobius matrix");
    add_input_options(mobius, opts, true);
    add_output_options(mobius, opts);
    mobius->add_option("--method", method, "invert | recurrence | closed")
        ->check(CLI::IsMember({"invert", "recurrence", "closed"}));

    CLI::App* max = app.add_subcommand("max", "emit the [Max] matrix");
    add_input_options(max, opts, true);
    add_output_options(max, opts);

    CLI::App* eta = app.add_subcommand("eta", "emit the reflexive cover eta");
    add_input_options(eta, opts, true);
    add_output_options(eta, opts);
    eta->add_flag("--inverse", eta_inv, "emit the inverse of eta instead");

    CLI::App* coding = app.add_subcommand("coding", "emit the coding matrix");
    add_input_options(coding, opts, false);
    add_output_options(coding, opts);

    CLI::App* kroton_cmd =
        app.add_subcommand("kroton", "evaluate the Kroton function K_s(r_F)");
    kroton_cmd->add_option("--seq", opts.seq_spec, "sequence spec")->required();
    kroton_cmd->add_option("--r", r_arg, "lower level")->required();
    kroton_cmd->add_option("--s", s_arg, "upper level")->required();
    add_output_options(kroton_cmd, opts);

    CLI::App* fnomial_cmd =
        app.add_subcommand("fnomial", "evaluate an F-nomial coefficient");
    fnomial_cmd->add_option("--seq", opts.seq_spec, "sequence spec")->required();
    fnomial_cmd->add_option("--n", n_arg, "upper index")->required();
    fnomial_cmd->add_option("--k", k_arg, "lower index")->required();
    add_output_options(fnomial_cmd, opts);

    CLI::App* chains_cmd =
        app.add_subcommand("chains", "count or enumerate layer chains");
    add_input_options(chains_cmd, opts, true);
    add_output_options(chains_cmd, opts);
    chains_cmd->add_option("--from", from, "first level of the layer")
        ->required();
    chains_cmd->add_option("--to", to, "last level of the layer")->required();
    chains_cmd->add_flag("--enumerate", enumerate, "emit the full chain list");
    chains_cmd->add_option("--cap", cap, "enumeration cap");

    CLI::App* lascala =
        app.add_subcommand("lascala", "render the staircase of a cobweb zeta");
    lascala->add_option("--seq", opts.seq_spec, "sequence spec")->required();
    lascala->add_option("--levels", opts.levels, "number of levels")
        ->required();
    lascala->add_option("--width", width, "cap on rendered matrix columns");
    lascala->add_option("--out", opts.out_path, "write output to a file");

    CLI::App* random_cmd =
        app.add_subcommand("random", "emit a seeded random graded poset");
    random_cmd->add_option("--seq", opts.seq_spec, "sequence spec")->required();
    random_cmd->add_option("--levels", opts.levels, "number of levels")
        ->required();
    random_cmd->add_option("--density", density_text,
                           "edge density in (0,1], e.g. 0.4 or 2/5");
    random_cmd->add_option("--seed", seed, "random seed");
    random_cmd->add_flag("--allow-mute", allow_mute,
                         "keep nodes with no incoming or outgoing arcs");
    random_cmd->add_option("--out", opts.out_path, "write output to a file");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option(
        "--suite", suite,
        "all | zeta-equivalence | mobius | max | theorems | conjectures");
    verify_cmd->add_option("--levels", opts.levels, "depth bound (default 6)");
    verify_cmd->add_option("--random", random_count,
                           "number of seeded random posets");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--cap", cap, "enumeration cap");
    verify_cmd->add_option("--poset", opts.poset_path,
                           "extra poset document to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: config: " << e.what() << "\n";
        return kConfig;
    }

    try {
        if (zeta->parsed()) return run_matrix_command("zeta", opts, "", false);
        if (mobius->parsed()) {
            return run_matrix_command("mobius", opts, method, false);
        }
        if (max->parsed()) return run_matrix_command("max", opts, "", false);
        if (eta->parsed()) return run_matrix_command("eta", opts, "", eta_inv);
        if (coding->parsed()) {
            Sequence seq = resolve_sequence(opts);
            if (opts.levels < 1) throw ConfigError("--levels must be >= 1");
            emit(opts, coding_to_json(coding_matrix(seq, opts.levels)));
            return kOk;
        }
        if (kroton_cmd->parsed()) {
            KrotonValue v = kroton(resolve_sequence(opts), r_arg, s_arg);
            if (opts.format == "ascii" || opts.format == "csv") {
                emit(opts, v.value.str() + "\n");
            } else {
                emit(opts, std::string("{\"r\":") + std::to_string(v.r) +
                               ",\"s\":" + std::to_string(v.s) +
                               ",\"value\":\"" + v.value.str() + "\"}\n");
            }
            return kOk;
        }
        if (fnomial_cmd->parsed()) {
            FNomial f = resolve_sequence(opts).fnomial(n_arg, k_arg);
            if (opts.format == "ascii" || opts.format == "csv") {
                std::string s = f.numerator.str();
                if (!f.integral()) s += "/" + f.denominator.str();
                emit(opts, s + "\n");
            } else {
                emit(opts, std::string("{\"denominator\":\"") +
                               f.denominator.str() + "\",\"integral\":" +
                               (f.integral() ? "true" : "false") +
                               ",\"k\":" + std::to_string(k_arg) +
                               ",\"n\":" + std::to_string(n_arg) +
                               ",\"numerator\":\"" + f.numerator.str() +
                               "\"}\n");
            }
            return kOk;
        }
        if (chains_cmd->parsed()) {
            return run_chains(opts, from, to, enumerate, cap);
        }
        if (lascala->parsed()) {
            Sequence seq = Sequence::parse(opts.seq_spec);
            CommonOpts plain = opts; // lascala is ascii by contract
            emit(plain, render_lascala(seq, opts.levels, width));
            return kOk;
        }
        if (random_cmd->parsed()) {
            Sequence seq = Sequence::parse(opts.seq_spec);
            Density density = Density::parse(density_text);
            GradedPoset p =
                random_poset(seq, opts.levels, density, seed, allow_mute);
            emit(opts, poset_to_json(p));
            return kOk;
        }
        if (verify_cmd->parsed()) {
            verify::Options vopts;
            if (opts.levels > 0) vopts.levels = opts.levels;
            vopts.random_count = random_count;
            vopts.seed = seed;
            vopts.cap = cap;
            if (!opts.poset_path.empty()) vopts.poset_path = opts.poset_path;
            return run_verify(vopts, suite);
        }
        throw ConfigError("no command given");
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return kConfig;
    } catch (const CapError& e) {
        std::cerr << "error: cap: " << e.what() << "\n";
        return kCap;
    } catch (const DomainError& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return kDomain;
    }
}
