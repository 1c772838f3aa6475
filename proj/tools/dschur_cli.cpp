// Command-line surface: expansions, coefficient queries, and the
// verification suites, with text/JSON/LaTeX output.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dschur/expand.hpp>
#include <dschur/io.hpp>
#include <dschur/verify.hpp>

namespace {

using namespace dschur;

// "8,3,1" (comma separated) or a compact digit string like "22"; the compact
// form reads single digits, so multi-digit parts need commas.
Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t next = text.find(',', pos);
            const std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
            if (!tok.empty()) parts.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        bool digits = !text.empty();
        for (char c : text)
            if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
        if (!digits) throw std::invalid_argument("malformed partition: " + text);
        bool decreasing = true;
        for (std::size_t i = 0; i + 1 < text.size(); ++i)
            if (text[i] < text[i + 1]) decreasing = false;
        if (decreasing && text.size() > 1) {
            for (char c : text) parts.push_back(c - '0');
        } else {
            parts.push_back(std::stoi(text));
        }
    }
    return Partition{std::move(parts)};
}

SkewShape parse_shape(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)),
                     parse_partition(text.substr(slash + 1)));
}

RenderStyle style_of(const std::string& format) {
    return format == "latex" ? RenderStyle::latex : RenderStyle::plain;
}

void print_poly(const Poly& p, const std::string& format) {
    if (format == "json")
        std::cout << to_json(p).dump(2) << "\n";
    else
        std::cout << render(p, style_of(format)) << "\n";
}

void print_expansion(const SchurExpansion& e, const std::string& format) {
    if (format == "json")
        std::cout << to_json(e).dump(2) << "\n";
    else
        std::cout << render(e, style_of(format)) << "\n";
}

json words_to_json(const std::vector<HWord>& words) {
    json arr = json::array();
    for (const auto& w : words) {
        json fs = json::array();
        for (const auto& [k, s] : w.factors) fs.push_back(json::array({k, s}));
        arr.push_back(json{{"factors", fs}, {"coeff", to_json(w.coeff)}});
    }
    return json{{"words", arr}};
}

std::string words_to_text(const std::vector<HWord>& words, RenderStyle style) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += style == RenderStyle::latex ? " + " : "\n+ ";
        out += render_factor(w.coeff, style) + " ";
        if (w.factors.empty()) out += "1";
        for (const auto& [k, s] : w.factors) {
            if (style == RenderStyle::latex)
                out += "h_{" + std::to_string(k) + "," + std::to_string(s) + "} ";
            else
                out += "h[" + std::to_string(k) + "," + std::to_string(s) + "]";
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for deformed (double/factorial) supersymmetric Schur functions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string shape_text, partition_text, inner_text, suite = "all", direction = "multiply";
    std::string basis = "h";
    int k = 1, vars = 2, shift = 0, order = 10, window = 8, max_size = 5;
    int ell = -1;
    bool dual = false;
    std::uint64_t seed = 20240815;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    auto* cmd_expand_h = app.add_subcommand("expand-h", "double complete function h_k(x/y||s^s a)");
    cmd_expand_h->add_option("--k", k, "degree")->required();
    cmd_expand_h->add_option("--vars", vars, "number of x/y variable pairs");
    cmd_expand_h->add_option("--shift", shift, "alpha shift s");
    add_format(cmd_expand_h);

    auto* cmd_expand_e = app.add_subcommand("expand-e", "double elementary function e_k(x/y||s^s a)");
    cmd_expand_e->add_option("--k", k, "degree")->required();
    cmd_expand_e->add_option("--vars", vars, "number of x/y variable pairs");
    cmd_expand_e->add_option("--shift", shift, "alpha shift s");
    add_format(cmd_expand_e);

    auto* cmd_schur = app.add_subcommand("schur", "double Schur function of a (skew) shape");
    cmd_schur->add_option("--shape", shape_text, "outer[/inner] partition")->required();
    cmd_schur->add_option("--vars", vars, "number of x/y variable pairs");
    cmd_schur->add_option("--basis", basis, "h, e, or tableaux")
        ->check(CLI::IsMember({"h", "e", "tableaux"}));
    cmd_schur->add_option("--ell", ell, "determinant size (defaults to the shape length)");
    add_format(cmd_schur);

    auto* cmd_mn = app.add_subcommand("mn", "Murnaghan-Nakayama product or derivative");
    cmd_mn->add_option("--partition", partition_text, "partition lambda")->required();
    cmd_mn->add_option("--k", k, "powersum index")->required();
    cmd_mn->add_option("--direction", direction, "multiply (p_k s_lambda) or derivative")
        ->check(CLI::IsMember({"multiply", "derivative"}));
    add_format(cmd_mn);

    auto* cmd_pieri = app.add_subcommand("pieri", "Pieri expansion h_k s_mu (or e_k with --dual)");
    cmd_pieri->add_option("--partition", partition_text, "partition mu")->required();
    cmd_pieri->add_option("--k", k, "Pieri degree")->required();
    cmd_pieri->add_option("--shape", shape_text, "target lambda: print only its coefficient");
    cmd_pieri->add_option("--ell", ell, "column bound (defaults to the stable value)");
    cmd_pieri->add_flag("--dual", dual, "dual (elementary) rule");
    add_format(cmd_pieri);

    auto* cmd_skew = app.add_subcommand("skew-pieri", "skew Pieri coefficient c_{k,mu/nu}^{lambda/eta}");
    cmd_skew->add_option("--shape", shape_text, "lambda/eta")->required();
    cmd_skew->add_option("--inner", inner_text, "mu/nu")->required();
    cmd_skew->add_option("--k", k, "Pieri degree")->required();
    cmd_skew->add_flag("--dual", dual, "dual (elementary) rule");
    add_format(cmd_skew);

    auto* cmd_raising = app.add_subcommand("raising", "raising-operator h-word expansion");
    cmd_raising->add_option("--partition", partition_text, "partition lambda")->required();
    add_format(cmd_raising);

    auto* cmd_verify = app.add_subcommand("verify", "run identity suites");
    cmd_verify->add_option("--suite", suite, "suite name or 'all'");
    cmd_verify->add_option("--max-size", max_size, "partition size bound");
    cmd_verify->add_option("--seed", seed, "seed for randomized cases");
    cmd_verify->add_option("--order", order, "series truncation order");
    cmd_verify->add_option("--window", window, "index window for current sums");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_expand_h) {
            print_poly(double_h(k, {vars}, shift), format);
        } else if (*cmd_expand_e) {
            print_poly(double_e(k, {vars}, shift), format);
        } else if (*cmd_schur) {
            const SkewShape shape = parse_shape(shape_text);
            Poly result;
            if (basis == "tableaux") {
                result = schur_double_tableaux(shape, {vars});
            } else {
                const SymKind kind = basis == "h" ? SymKind::h : SymKind::e;
                const Partition& rows = kind == SymKind::h ? shape.outer : shape.outer.conjugate();
                result = schur_double_jt(shape, {vars}, kind,
                                         ell >= 0 ? ell : std::max(rows.length(), 1));
            }
            print_poly(result, format);
        } else if (*cmd_mn) {
            const Partition lam = parse_partition(partition_text);
            print_expansion(direction == "multiply" ? mn_multiply(lam, k) : mn_derivative(lam, k),
                            format);
        } else if (*cmd_pieri) {
            const Partition mu = parse_partition(partition_text);
            const SymKind kind = dual ? SymKind::e : SymKind::h;
            if (!shape_text.empty()) {
                const Partition lam = parse_partition(shape_text);
                const int L = ell >= 0 ? ell : std::max(lam.length(), lam.part(1));
                Poly c;
                if (kind == SymKind::h) {
                    c = pieri_h_coeff(mu, lam, k, L);
                    const Poly r = pieri_h_coeff(mu, lam, k, L, PieriMethod::residue);
                    if (!(c == r)) throw std::logic_error("closed and residue forms disagree");
                } else {
                    c = pieri_e_coeff(mu, lam, k, L);
                }
                print_poly(c, format);
            } else {
                print_expansion(pieri_expansion(mu, k, kind, ell >= 0 ? ell : 0), format);
            }
        } else if (*cmd_skew) {
            const SkewShape out = parse_shape(shape_text);
            const SkewShape in = parse_shape(inner_text);
            print_poly(skew_pieri_coeff(out, in, k, dual ? SymKind::e : SymKind::h), format);
        } else if (*cmd_raising) {
            const auto words = raising_expansion(parse_partition(partition_text));
            if (format == "json")
                std::cout << words_to_json(words).dump(2) << "\n";
            else
                std::cout << words_to_text(words, style_of(format)) << "\n";
        } else if (*cmd_verify) {
            verify::Options opts;
            opts.order = order;
            opts.window = window;
            opts.max_size = max_size;
            opts.seed = seed;
            std::vector<std::string> names;
            if (suite == "all") {
                for (const auto& [name, fn] : verify::suites()) names.push_back(name);
            } else {
                bool known = false;
                for (const auto& [name, fn] : verify::suites()) known |= name == suite;
                if (!known) {
                    std::cerr << "unknown suite: " << suite << "\navailable:";
                    for (const auto& [name, fn] : verify::suites()) std::cerr << " " << name;
                    std::cerr << "\n";
                    return 2;
                }
                names.push_back(suite);
            }
            int failures = 0;
            for (const auto& name : names) {
                const verify::Result r = verify::run_suite(name, opts);
                std::printf("[%s] %-20s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.suite.c_str(),
                            r.seconds);
                if (!r.pass) {
                    std::printf("       %s\n", r.counterexample.c_str());
                    ++failures;
                }
                std::fflush(stdout);
            }
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
