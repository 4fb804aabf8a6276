// akp_main.cpp -- command-line verifier for Abelian k-power freeness of
// morphic fixed points.
//
// Exit codes: 0 = free / ok, 1 = contains / power found,
// 2 = precondition failed, 3 = usage, parse, or internal error.
#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <akp/akp.hpp>

namespace {

using namespace akp;

constexpr int kExitFree = 0;
constexpr int kExitContains = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitError = 3;

int status_exit_code(Status s) {
    switch (s) {
        case Status::Free: return kExitFree;
        case Status::Contains: return kExitContains;
        case Status::PreconditionFailed: return kExitPrecondition;
    }
    return kExitError;
}

std::string border_text(Letter a) {
    return a == kNoBorder ? std::string(".") : std::to_string(a);
}

void print_template(std::ostream& os, const Template& t) {
    os << '[';
    for (std::size_t i = 0; i < t.borders.size(); ++i) {
        if (i) os << ',';
        os << border_text(t.borders[i]);
    }
    os << " |";
    for (const ParikhVector& d : t.diffs) {
        os << " (";
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j) os << ',';
            os << d[j];
        }
        os << ')';
    }
    os << "]";
}

int run_decide(const std::string& path, int k, const std::string& format,
               std::size_t max_closure, const std::string& bound) {
    const Morphism mu = load_morphism(path);
    DeciderConfig cfg;
    cfg.closure_cap = max_closure;
    cfg.bound = bound == "paper" ? BoundMode::Paper : BoundMode::Derived;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict verdict = decide(mu, k, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    const RunReport report = make_report(verdict, std::chrono::duration<double>(t1 - t0).count());
    if (format == "json")
        std::cout << to_json(report).dump(2) << '\n';
    else
        std::cout << to_text(report);
    return status_exit_code(verdict.status);
}

int run_conditions(const std::string& path) {
    const Morphism mu = load_morphism(path);
    const ValidationReport vr = validate(mu);
    const char* yes = "yes";
    const char* no = "no";
    std::cout << "prolongable_on_one: " << (vr.prolongable_on_one ? yes : no) << '\n';
    std::cout << "image_lengths_ok: " << (vr.images_long_enough ? yes : no) << '\n';
    std::cout << "letters_in_range: " << (vr.letters_in_range ? yes : no) << '\n';
    bool matrix_ok = false;
    if (vr.letters_in_range) {
        const FrequencyMatrix M = frequency_matrix(mu);
        const BigInt d = det(M);
        std::cout << "det: " << d.str() << '\n';
        if (d != 0) {
            std::cout << "sylvester_minors:";
            for (const BigInt& v : contraction_minors(M)) std::cout << ' ' << v.str();
            std::cout << '\n';
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", inverse_norm_estimate(M));
            std::cout << "norm_estimate: " << buf << '\n';
            matrix_ok = inverse_norm_lt_one(M);
            std::cout << "inverse_norm_lt_one: " << (matrix_ok ? yes : no) << '\n';
        } else {
            std::cout << "sylvester_minors: unavailable\n";
            std::cout << "norm_estimate: unavailable\n";
            std::cout << "inverse_norm_lt_one: no\n";
        }
    } else {
        std::cout << "det: unavailable\n";
        std::cout << "sylvester_minors: unavailable\n";
        std::cout << "norm_estimate: unavailable\n";
        std::cout << "inverse_norm_lt_one: no\n";
    }
    const bool ok = vr.ok() && matrix_ok;
    std::cout << "result: " << (ok ? "ok" : "failed") << '\n';
    return ok ? kExitFree : kExitPrecondition;
}

int run_ancestors(const std::string& path, int k, bool dump) {
    const Morphism mu = load_morphism(path);
    const ValidationReport vr = validate(mu);
    if (!vr.ok()) {
        std::cout << "precondition failed: morphism structure\n";
        return kExitPrecondition;
    }
    const FrequencyMatrix M = frequency_matrix(mu);
    if (det(M) == 0) {
        std::cout << "precondition failed: " << kReasonSingular << '\n';
        return kExitPrecondition;
    }
    if (!inverse_norm_lt_one(M)) {
        std::cout << "precondition failed: " << kReasonNorm << '\n';
        return kExitPrecondition;
    }
    const AncestorClosure closure = ancestors(mu, k);
    std::cout << "ancestors: " << closure.all.size() << '\n';
    std::cout << "generation_sizes:";
    for (std::size_t g : closure.generation_sizes) std::cout << ' ' << g;
    std::cout << '\n';
    std::cout << "delta: " << delta(closure.all) << '\n';
    if (dump) {
        for (const Template& t : closure.all) {
            print_template(std::cout, t);
            std::cout << '\n';
        }
    }
    return kExitFree;
}

int run_factors(const std::string& path, int max_len) {
    const Morphism mu = load_morphism(path);
    if (!validate(mu).ok()) {
        std::cout << "precondition failed: morphism structure\n";
        return kExitPrecondition;
    }
    const auto factors = factor_set(mu, static_cast<std::size_t>(max_len));
    for (const Word& w : factors) std::cout << format_word(w) << '\n';
    return kExitFree;
}

int run_oracle(const std::string& path, int k, long long n) {
    const Morphism mu = load_morphism(path);
    if (!validate(mu).ok()) {
        std::cout << "precondition failed: morphism structure\n";
        return kExitPrecondition;
    }
    const Word prefix = fixed_point_prefix(mu, static_cast<std::size_t>(n));
    if (const auto occ = find_abelian_power(prefix, k, mu.m)) {
        const Word w(prefix.begin() + static_cast<std::ptrdiff_t>(occ->position),
                     prefix.begin() + static_cast<std::ptrdiff_t>(
                                          occ->position + static_cast<std::size_t>(k) * occ->block_length));
        std::cout << "found: position=" << occ->position << " block_length=" << occ->block_length
                  << " word=" << format_word(w) << '\n';
        return kExitContains;
    }
    std::cout << "no abelian " << k << "-power in prefix of length " << prefix.size() << '\n';
    return kExitFree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides Abelian k-power freeness of the fixed point of a morphism"};
    app.require_subcommand(1);

    std::string file;
    int k = 2;
    std::string format = "text";
    std::size_t max_closure = 1'000'000;
    std::string bound = "derived";
    int factor_len = 0;
    long long prefix_len = 0;
    bool dump = false;

    auto* decide_cmd = app.add_subcommand("decide", "Run the full decision procedure");
    decide_cmd->add_option("-f,--file", file, "morphism file")->required();
    decide_cmd->add_option("-k", k, "power exponent")->required()->check(CLI::Range(2, 1 << 20));
    decide_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    decide_cmd->add_option("--max-closure", max_closure, "ancestor cap");
    decide_cmd->add_option("--bound", bound, "scan bound flavor")
        ->check(CLI::IsMember({"derived", "paper"}));

    auto* cond_cmd = app.add_subcommand("conditions", "Report the morphism preconditions");
    cond_cmd->add_option("-f,--file", file, "morphism file")->required();

    auto* anc_cmd = app.add_subcommand("ancestors", "Compute the template ancestor closure");
    anc_cmd->add_option("-f,--file", file, "morphism file")->required();
    anc_cmd->add_option("-k", k, "power exponent")->required()->check(CLI::Range(2, 1 << 20));
    anc_cmd->add_flag("--dump", dump, "print every template");

    auto* fac_cmd = app.add_subcommand("factors", "Enumerate fixed-point factors up to a length");
    fac_cmd->add_option("-f,--file", file, "morphism file")->required();
    fac_cmd->add_option("-L", factor_len, "maximum factor length")->required()
        ->check(CLI::Range(1, 1 << 20));

    auto* ora_cmd = app.add_subcommand("oracle", "Brute-force scan a fixed-point prefix");
    ora_cmd->add_option("-f,--file", file, "morphism file")->required();
    ora_cmd->add_option("-k", k, "power exponent")->required()->check(CLI::Range(2, 1 << 20));
    ora_cmd->add_option("-n", prefix_len, "prefix length")->required()
        ->check(CLI::Range(1LL, 1LL << 32));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (decide_cmd->parsed()) return run_decide(file, k, format, max_closure, bound);
        if (cond_cmd->parsed()) return run_conditions(file);
        if (anc_cmd->parsed()) return run_ancestors(file, k, dump);
        if (fac_cmd->parsed()) return run_factors(file, factor_len);
        if (ora_cmd->parsed()) return run_oracle(file, k, prefix_len);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
