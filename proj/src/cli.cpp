#include "kflag/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kflag/ddo.hpp"
#include "kflag/errors.hpp"
#include "kflag/gkm.hpp"
#include "kflag/groth.hpp"
#include "kflag/io.hpp"
#include "kflag/kirwan.hpp"

namespace kflag::cli {

namespace {

using io::Json;

struct Options {
    int n = 0;
    std::string w, gamma, at, op, poly_file, class_file, lambda, mu, out_file;
    int i = 0;
    int jobs = 1;
    int bound = kDefaultVerifyBound;
    bool json = false;
    bool quiet = false;
};

Permutation perm_arg(const std::string& text, int n, const char* flag) {
    auto p = io::parse_permutation(text);
    if (p.rank() != n)
        throw InvalidInput(std::string(flag) + " " + text + " has rank " + std::to_string(p.rank()) +
                           " but --n is " + std::to_string(n));
    return p;
}

Permutation gamma_arg(const Options& o) {
    return o.gamma.empty() ? Permutation::identity(o.n) : perm_arg(o.gamma, o.n, "--gamma");
}

Json read_json(const std::string& path, std::istream& in) {
    std::stringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw InvalidInput("cannot open " + path);
        buf << file.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void emit_poly(const LaurentPoly& f, const Options& o, std::ostream& out) {
    if (o.json)
        out << io::dump(io::to_json(f));
    else
        out << f.to_string() << "\n";
}

void emit_set(const SupportSet& s, const Options& o, std::ostream& out) {
    if (o.json) {
        out << io::dump(io::to_json(s));
        return;
    }
    for (const auto& z : s) out << z.to_string() << "\n";
}

int cmd_groth(const Options& o, std::ostream& out) {
    const auto w = perm_arg(o.w, o.n, "--w");
    emit_poly(shared_cache().permuted(w, gamma_arg(o)), o, out);
    return kOk;
}

int cmd_ddo(const Options& o, std::istream& in, std::ostream& out) {
    const auto f = io::poly_from_json(read_json(o.poly_file, in));
    emit_poly(o.op == "delta" ? delta(o.i, f) : pi(o.i, f), o, out);
    return kOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
    const auto& g = shared_cache().permuted(perm_arg(o.w, o.n, "--w"), gamma_arg(o));
    if (!o.at.empty()) {
        emit_poly(restrict_at(g, perm_arg(o.at, o.n, "--at")), o, out);
        return kOk;
    }
    const auto alpha = restrict_all(g);
    if (o.json) {
        out << io::dump(io::to_json(alpha));
    } else {
        for (std::size_t k = 0; k < alpha.points().size(); ++k)
            out << alpha.points()[k].to_string() << ": " << alpha.entries()[k].to_string() << "\n";
    }
    return kOk;
}

int cmd_support(const Options& o, std::ostream& out) {
    emit_set(support(shared_cache().permuted(perm_arg(o.w, o.n, "--w"), gamma_arg(o))), o, out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::size_t last_pct = 0;
    auto progress = [&](std::size_t done, std::size_t total) {
        const std::size_t pct = done * 100 / total;
        if (pct >= last_pct + 10 || done == total) {
            last_pct = pct;
            err << "verify: " << done << "/" << total << " pairs\n" << std::flush;
        }
    };
    std::function<void(std::size_t, std::size_t)> cb;
    if (!o.quiet) cb = progress;
    const auto report = verify_support_theorem(o.n, o.jobs, o.bound, &shared_cache(), cb);
    if (o.json) {
        out << io::dump(io::to_json(report));
    } else {
        out << "n=" << report.n << " pairs=" << report.pairs.size()
            << " passed=" << report.pairs.size() - report.failures() << " failed=" << report.failures() << "\n";
        for (const auto& p : report.pairs) {
            if (p.pass) continue;
            out << "FAIL w=" << p.w.to_string() << " gamma=" << p.gamma.to_string() << "\n";
            for (const auto& c : p.counterexamples)
                out << "  z=" << c.z.to_string() << " restriction=" << c.restriction.to_string()
                    << " in_support=" << c.in_support << " in_interval=" << c.in_interval << "\n";
        }
    }
    return report.all_pass() ? kOk : kCounterexample;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    const auto gamma = gamma_arg(o);
    const auto alpha = io::restriction_class_from_json(read_json(o.class_file, in));
    if (alpha.rank() != o.n) throw InvalidInput("class has rank " + std::to_string(alpha.rank()) + " but --n is " +
                                                std::to_string(o.n));
    const auto coeffs = decompose(alpha, gamma);
    if (o.json) {
        out << io::dump(io::to_json(coeffs));
    } else {
        for (const auto& [w, a] : coeffs) out << w.to_string() << ": " << a.to_string() << "\n";
    }
    return kOk;
}

int cmd_regular(const Options& o, std::ostream& out) {
    const auto report = is_regular(io::parse_weights(o.lambda), io::parse_weights(o.mu));
    if (o.json) {
        out << io::dump(io::to_json(report));
    } else {
        out << (report.regular ? "regular" : "not regular") << "\n";
        for (const auto& t : report.walls)
            out << "wall v=" << t.v.to_string() << " gamma=" << t.gamma.to_string() << " k=" << t.k << "\n";
    }
    return report.regular ? kOk : kNotRegular;
}

int cmd_kernel(const Options& o, std::ostream& out) {
    const auto lambda = io::parse_weights(o.lambda);
    const auto mu = io::parse_weights(o.mu);
    const auto gens = kernel_generators(lambda, mu, o.jobs);
    for (const auto& g : gens) half_space_soundness(g, lambda, mu);
    if (o.json) {
        out << io::dump(io::to_json(gens));
    } else {
        for (const auto& g : gens) {
            out << "v=" << g.v.to_string() << " gamma=" << g.gamma.to_string() << " k=";
            for (std::size_t k = 0; k < g.witnesses.size(); ++k) out << (k ? "," : "") << g.witnesses[k];
            out << ": " << g.poly.to_string() << "\n";
        }
    }
    return kOk;
}

int cmd_presentation(const Options& o, std::ostream& out) {
    const auto lambda = io::parse_weights(o.lambda);
    const auto mu = io::parse_weights(o.mu);
    const auto p = presentation(lambda, mu, o.jobs);
    for (const auto& g : p.kernel) half_space_soundness(g, lambda, mu);
    const auto text = io::dump(io::to_json(p));
    if (o.out_file.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file) throw InvalidInput("cannot write " + o.out_file);
        file << text;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double Grothendieck polynomials, fixed-point localization and weight-variety presentations",
                 "kflag"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON instead of text"); };
    auto add_rank = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Rank n of S_n")->required()->check(CLI::Range(1, kDefaultEnumerateBound));
    };

    auto* groth = app.add_subcommand("groth", "Permuted double Grothendieck polynomial G_w^gamma");
    add_rank(groth);
    groth->add_option("--w", o.w, "Permutation w, one-line notation")->required();
    groth->add_option("--gamma", o.gamma, "Permutation gamma (default identity)");
    add_json(groth);

    auto* ddo = app.add_subcommand("ddo", "Apply a divided difference operator to a polynomial");
    ddo->add_option("--op", o.op, "delta or pi")->required()->check(CLI::IsMember({"delta", "pi"}));
    ddo->add_option("--i", o.i, "Operator index i (1 <= i < n)")->required();
    ddo->add_option("--poly", o.poly_file, "Polynomial JSON file, or - for stdin")->required();
    add_json(ddo);

    auto* restr = app.add_subcommand("restrict", "Restrict G_w^gamma to fixed points");
    add_rank(restr);
    restr->add_option("--w", o.w, "Permutation w")->required();
    restr->add_option("--gamma", o.gamma, "Permutation gamma (default identity)");
    restr->add_option("--at", o.at, "Fixed point z; omit for the full restriction class");
    add_json(restr);

    auto* supp = app.add_subcommand("support", "Support of G_w^gamma");
    add_rank(supp);
    supp->add_option("--w", o.w, "Permutation w")->required();
    supp->add_option("--gamma", o.gamma, "Permutation gamma (default identity)");
    add_json(supp);

    auto* verify = app.add_subcommand("verify", "Exhaustively check Supp(G_w^gamma) = permuted Bruhat interval");
    add_rank(verify);
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--bound", o.bound, "Largest n accepted")->capture_default_str();
    verify->add_flag("--quiet", o.quiet, "No progress on stderr");
    add_json(verify);

    auto* dec = app.add_subcommand("decompose", "Coefficients of a localized class in the G^gamma basis");
    add_rank(dec);
    dec->add_option("--gamma", o.gamma, "Permutation gamma (default identity)");
    dec->add_option("--class", o.class_file, "Restriction class JSON file, or - for stdin")->required();
    add_json(dec);

    auto* regular = app.add_subcommand("regular", "Check that (lambda, mu) avoids every tail-sum wall");
    regular->add_option("--lambda", o.lambda, "Strictly decreasing zero-sum weights, e.g. 1,0,-1")->required();
    regular->add_option("--mu", o.mu, "Zero-sum weights, e.g. 1/4,1/8,-3/8")->required();
    add_json(regular);

    auto* kernel = app.add_subcommand("kernel", "Kernel generators pi_v G(x, y_gamma) of the Kirwan map");
    kernel->add_option("--lambda", o.lambda, "Strictly decreasing zero-sum weights")->required();
    kernel->add_option("--mu", o.mu, "Zero-sum weights")->required();
    kernel->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_json(kernel);

    auto* pres = app.add_subcommand("presentation", "Generators and relations for K(O_lambda // T at mu)");
    pres->add_option("--lambda", o.lambda, "Strictly decreasing zero-sum weights")->required();
    pres->add_option("--mu", o.mu, "Zero-sum weights")->required();
    pres->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    pres->add_option("--out", o.out_file, "Write the JSON here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (groth->parsed()) return cmd_groth(o, out);
        if (ddo->parsed()) return cmd_ddo(o, in, out);
        if (restr->parsed()) return cmd_restrict(o, out);
        if (supp->parsed()) return cmd_support(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (dec->parsed()) return cmd_decompose(o, in, out);
        if (regular->parsed()) return cmd_regular(o, out);
        if (kernel->parsed()) return cmd_kernel(o, out);
        if (pres->parsed()) return cmd_presentation(o, out);
    } catch (const NotRegular& e) {
        err << "not regular: " << e.what() << "\n";
        return kNotRegular;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const NotInSpan& e) {
        err << "not in span: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInvalidInput;
}

} // namespace kflag::cli
