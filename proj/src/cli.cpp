#include "ecpkit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "ecpkit/code.hpp"
#include "ecpkit/construct.hpp"
#include "ecpkit/ecp.hpp"
#include "ecpkit/error.hpp"
#include "ecpkit/harness.hpp"
#include "ecpkit/io.hpp"
#include "ecpkit/schur.hpp"
#include "ecpkit/theorems.hpp"

namespace ecpkit {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 1;
    std::uint64_t budget = std::uint64_t{1} << 24;

    bool record() const { return format == "record"; }
    DistanceOptions dist() const { return DistanceOptions{DistanceStrategy::Auto, budget}; }
};

// Writes to the file when one was given, else to `out`.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
    } else {
        save_text_file(path, text);
    }
}

LoadedCode load(const std::string& path, std::ostream& err) {
    LoadedCode lc = load_code_file(path);
    for (const auto& w : lc.warnings) err << "warning: " << path << ": " << w << '\n';
    return lc;
}

struct PairArgs {
    std::string a;
    std::string b;
    std::string c;
    std::size_t ell = 0;

    void attach(CLI::App* sub) {
        sub->add_option("--a", a, "code file for A")->required();
        sub->add_option("--b", b, "code file for B")->required();
        sub->add_option("--c", c, "code file for C")->required();
        sub->add_option("--ell", ell, "number of errors")->required();
    }
};

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Error-correcting pairs for MDS and NMDS codes", "ecpkit"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "output style")->check(CLI::IsMember({"text", "record"}));
    app.add_option("--seed", g.seed, "seed for randomized sweeps");
    app.add_option("--budget", g.budget, "work budget for exact minimum distance");

    std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;

    // field-info
    {
        auto* sub = app.add_subcommand("field-info", "describe F_(p^m)");
        auto p = std::make_shared<unsigned>(0);
        auto m = std::make_shared<unsigned>(1);
        auto modulus = std::make_shared<std::string>();
        sub->add_option("--p", *p, "characteristic")->required();
        sub->add_option("--m", *m, "extension degree");
        sub->add_option("--modulus", *modulus, "coefficients c0,...,cm of the modulus");
        handlers.emplace_back(sub, [&, p, m, modulus] {
            std::optional<std::vector<unsigned>> mod;
            if (!modulus->empty()) {
                mod.emplace();
                for (auto i : parse_index_list(*modulus)) mod->push_back(static_cast<unsigned>(i));
            }
            const FieldSpec f = FieldSpec::make(*p, *m, mod);
            std::string coeffs;
            for (std::size_t i = 0; i < f.modulus().size(); ++i) {
                coeffs += (i ? "," : "") + std::to_string(f.modulus()[i]);
            }
            if (g.record()) {
                out << "p=" << f.p() << " m=" << f.m() << " q=" << f.q() << " modulus=" << coeffs
                    << " primitive=" << f.primitive().value << '\n';
            } else {
                out << "field: F_" << f.q() << '\n'
                    << "p: " << f.p() << '\n'
                    << "m: " << f.m() << '\n'
                    << "q: " << f.q() << '\n'
                    << "modulus: " << coeffs << '\n'
                    << "primitive: " << f.primitive().value << '\n';
            }
            return kOk;
        });
    }

    // mindist
    {
        auto* sub = app.add_subcommand("mindist", "exact minimum distance");
        auto file = std::make_shared<std::string>();
        auto strategy = std::make_shared<std::string>("auto");
        sub->add_option("file", *file, "code file")->required();
        sub->add_option("--strategy", *strategy, "auto, enumerate or columns")
            ->check(CLI::IsMember({"auto", "enumerate", "columns"}));
        handlers.emplace_back(sub, [&, file, strategy] {
            const LoadedCode lc = load(*file, err);
            DistanceOptions o = g.dist();
            if (*strategy == "enumerate") o.strategy = DistanceStrategy::Enumerate;
            if (*strategy == "columns") o.strategy = DistanceStrategy::Columns;
            const std::size_t d = min_distance(lc.code, o);
            if (g.record()) {
                out << "n=" << lc.code.length() << " k=" << lc.code.dimension() << " d=" << d << '\n';
            } else {
                out << "d: " << d << '\n';
            }
            return kOk;
        });
    }

    // classify
    {
        auto* sub = app.add_subcommand("classify", "MDS / NMDS / AMDS / Other");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "code file")->required();
        handlers.emplace_back(sub, [&, file] {
            const LoadedCode lc = load(*file, err);
            const CodeClass cls = classify(lc.code, g.dist());
            const Params p{lc.code.length(), lc.code.dimension(), cls.d};
            if (g.record()) {
                out << "class=" << to_string(cls.tag) << " n=" << p.n << " k=" << p.k << " d=" << p.d
                    << " d_dual=" << cls.d_dual << '\n';
            } else {
                out << to_string(cls.tag) << ' ' << p.to_string() << '\n';
            }
            return kOk;
        });
    }

    // dual
    {
        auto* sub = app.add_subcommand("dual", "write the dual code");
        auto file = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        sub->add_option("file", *file, "code file")->required();
        sub->add_option("-o,--output", *output, "output code file");
        handlers.emplace_back(sub, [&, file, output] {
            emit(out, *output, write_code(dual(load(*file, err).code)));
            return kOk;
        });
    }

    // puncture
    {
        auto* sub = app.add_subcommand("puncture", "delete coordinates (0-based indices)");
        auto file = std::make_shared<std::string>();
        auto removed = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        sub->add_option("file", *file, "code file")->required();
        sub->add_option("--remove", *removed, "indices to delete, e.g. 0,3")->required();
        sub->add_option("-o,--output", *output, "output code file");
        handlers.emplace_back(sub, [&, file, removed, output] {
            emit(out, *output, write_code(puncture(load(*file, err).code, parse_index_list(*removed))));
            return kOk;
        });
    }

    // schur
    {
        auto* sub = app.add_subcommand("schur", "Schur product report");
        auto fa = std::make_shared<std::string>();
        auto fb = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>();
        sub->add_option("a", *fa, "code file for A")->required();
        sub->add_option("b", *fb, "code file for B")->required();
        sub->add_option("-o,--output", *output, "also write the product code here");
        handlers.emplace_back(sub, [&, fa, fb, output] {
            const LinearCode a = load(*fa, err).code;
            const LinearCode b = load(*fb, err).code;
            const LinearCode prod = schur_product(a, b);
            const ProductReport r = product_report(a, b, prod, g.dist());
            out << (g.record() ? r.to_record() + "\n" : r.to_text());
            if (!output->empty()) save_text_file(*output, write_code(prod));
            return kOk;
        });
    }

    // ecp-verify
    {
        auto* sub = app.add_subcommand("ecp-verify", "check the four pair conditions");
        auto args = std::make_shared<PairArgs>();
        args->attach(sub);
        handlers.emplace_back(sub, [&, args] {
            const EcpReport r = ecp_verify(load(args->a, err).code, load(args->b, err).code,
                                           load(args->c, err).code, args->ell, g.dist());
            out << (g.record() ? r.to_record() + "\n" : r.to_text());
            return r.is_ecp() ? kOk : kCheckFailed;
        });
    }

    // ecp-decode
    {
        auto* sub = app.add_subcommand("ecp-decode", "decode a received word with a pair");
        auto args = std::make_shared<PairArgs>();
        auto received = std::make_shared<std::string>();
        args->attach(sub);
        sub->add_option("--received", *received, "received word, comma separated")->required();
        handlers.emplace_back(sub, [&, args, received] {
            const LinearCode c = load(args->c, err).code;
            const Vec y = parse_felt_list(c.field(), *received);
            const EcpDecoder dec(load(args->a, err).code, load(args->b, err).code, c, args->ell, g.dist());
            const DecodeResult r = dec.decode(y);
            out << (g.record() ? r.to_record() + "\n" : r.to_text());
            return r.status == DecodeStatus::Decoded ? kOk : kCheckFailed;
        });
    }

    // ecp-search
    {
        auto* sub = app.add_subcommand("ecp-search", "search GRS-family pairs for C");
        auto file = std::make_shared<std::string>();
        auto ell = std::make_shared<std::size_t>(0);
        auto alpha = std::make_shared<std::string>();
        auto no_max = std::make_shared<bool>(false);
        sub->add_option("--c", *file, "code file or stanza for C")->required();
        sub->add_option("--ell", *ell, "number of errors")->required();
        sub->add_option("--alpha", *alpha, "evaluation sequence (defaults to the stanza's)");
        sub->add_flag("--no-maximal-b", *no_max, "skip B = (A*C) dual");
        handlers.emplace_back(sub, [&, file, ell, alpha, no_max] {
            const LoadedCode lc = load(*file, err);
            Vec seq;
            if (!alpha->empty()) {
                seq = parse_felt_list(lc.code.field(), *alpha);
            } else if (lc.alpha) {
                seq = *lc.alpha;
            } else {
                err << "error: ecp-search needs --alpha when C is a plain code file\n";
                return kUsage;
            }
            SearchOptions so;
            so.dist = g.dist();
            so.include_maximal_b = !*no_max;
            const auto found = ecp_search(lc.code, *ell, seq, so);
            for (const auto& w : found) {
                const std::string label = w.report.case_label ? w.report.case_label->to_string() : "none";
                if (g.record()) {
                    out << "A=" << w.a_label << " A_params=" << w.report.a.to_string() << " B=" << w.b_label
                        << " B_params=" << w.report.b.to_string() << " case=" << label << '\n';
                } else {
                    out << "A=" << w.a_label << ' ' << w.report.a.to_string() << "  B=" << w.b_label << ' '
                        << w.report.b.to_string() << "  case " << label << '\n';
                }
            }
            if (!g.record()) out << "pairs: " << found.size() << '\n';
            return kOk;
        });
    }

    // paper-examples
    {
        auto* sub = app.add_subcommand("paper-examples", "reproduce the three worked examples");
        auto dir = std::make_shared<std::string>();
        sub->add_option("--emit-dir", *dir, "write A, B and C of each example as code files");
        handlers.emplace_back(sub, [&, dir] {
            int status = kOk;
            for (ExampleId id : all_examples()) {
                const std::string name = to_string(id);
                try {
                    const EcpReport r = run_example(id, g.dist());
                    out << "PASS " << name << " C=" << r.c.to_string() << ' ' << to_string(r.c_class.tag)
                        << " A=" << r.a.to_string() << " B=" << r.b.to_string() << " case "
                        << (r.case_label ? r.case_label->to_string() : std::string("none")) << '\n';
                    if (!dir->empty()) {
                        std::filesystem::create_directories(*dir);
                        const ExampleTriple t = example_triple(id);
                        const std::filesystem::path base(*dir);
                        save_text_file((base / (name + "_A.code")).string(), write_code(t.a));
                        save_text_file((base / (name + "_B.code")).string(), write_code(t.b));
                        save_text_file((base / (name + "_C.code")).string(), write_code(t.c));
                    }
                } catch (const Error& e) {
                    out << "FAIL " << name << ": " << e.what() << '\n';
                    status = kCheckFailed;
                }
            }
            return status;
        });
    }

    // theorem-check
    {
        auto* sub = app.add_subcommand("theorem-check", "evaluate every theorem on one pair");
        auto args = std::make_shared<PairArgs>();
        auto example = std::make_shared<std::string>();
        auto alpha = std::make_shared<std::string>();
        sub->add_option("--example", *example, "use a worked example: ex3.1, ex4.1a or ex4.1b");
        sub->add_option("--a", args->a, "code file for A");
        sub->add_option("--b", args->b, "code file for B");
        sub->add_option("--c", args->c, "code file or stanza for C");
        sub->add_option("--ell", args->ell, "number of errors");
        sub->add_option("--alpha", *alpha, "evaluation sequence for the GRS conclusion");
        handlers.emplace_back(sub, [&, args, example, alpha] {
            std::vector<TheoremCheck> checks;
            if (!example->empty()) {
                const auto id = parse_example_id(*example);
                if (!id) {
                    err << "error: unknown example '" << *example << "'\n";
                    return kUsage;
                }
                const ExampleTriple t = example_triple(*id);
                checks = theorem_consequences(t.a, t.b, t.c, t.ell, t.alpha, g.dist());
            } else {
                if (args->a.empty() || args->b.empty() || args->c.empty() || args->ell == 0) {
                    err << "error: theorem-check needs --example or all of --a, --b, --c, --ell\n";
                    return kUsage;
                }
                const LoadedCode c = load(args->c, err);
                std::optional<Vec> seq = c.alpha;
                if (!alpha->empty()) seq = parse_felt_list(c.code.field(), *alpha);
                checks = theorem_consequences(load(args->a, err).code, load(args->b, err).code, c.code, args->ell,
                                              seq, g.dist());
            }
            int status = kOk;
            for (const auto& chk : checks) {
                out << (g.record() ? chk.to_record() : chk.to_text()) << '\n';
                if (chk.verdict == Verdict::Violated) status = kCheckFailed;
            }
            return status;
        });
    }

    // negative-search
    {
        auto* sub = app.add_subcommand("negative-search", "look for pairs the theorems rule out");
        auto family = std::make_shared<std::string>();
        auto q = std::make_shared<unsigned>(13);
        auto n_min = std::make_shared<std::size_t>(9);
        auto n_max = std::make_shared<std::size_t>(12);
        sub->add_option("--family", *family, "A2, A4, D4 or D7")->required()->check(
            CLI::IsMember({"A2", "A4", "D4", "D7"}));
        sub->add_option("--q", *q, "prime field size");
        sub->add_option("--n-min", *n_min, "smallest length");
        sub->add_option("--n-max", *n_max, "largest length");
        handlers.emplace_back(sub, [&, family, q, n_min, n_max] {
            const SearchReport r = negative_search(*parse_search_family(*family), *q, *n_min, *n_max, g.seed, g.dist());
            out << (g.record() ? r.to_record() + "\n" : r.to_text());
            return r.witnesses == 0 ? kOk : kCheckFailed;
        });
    }

    // tables
    {
        auto* sub = app.add_subcommand("tables", "print the case lemmas and both parameter tables");
        handlers.emplace_back(sub, [&] {
            out << emit_tables();
            return kOk;
        });
    }

    // construct
    {
        auto* sub = app.add_subcommand("construct", "build a GRS or twisted GRS code file");
        auto kind = std::make_shared<std::string>("grs");
        auto p = std::make_shared<unsigned>(0);
        auto m = std::make_shared<unsigned>(1);
        auto k = std::make_shared<std::size_t>(0);
        auto alpha = std::make_shared<std::string>();
        auto v = std::make_shared<std::string>();
        auto eta = std::make_shared<std::uint32_t>(0);
        auto t = std::make_shared<std::size_t>(1);
        auto h = std::make_shared<std::optional<std::size_t>>();
        auto output = std::make_shared<std::string>();
        sub->add_option("--kind", *kind, "grs or tgrs")->check(CLI::IsMember({"grs", "tgrs"}));
        sub->add_option("--p", *p, "characteristic")->required();
        sub->add_option("--m", *m, "extension degree (built-in modulus)");
        sub->add_option("--k", *k, "dimension")->required();
        sub->add_option("--alpha", *alpha, "evaluation points, comma separated")->required();
        sub->add_option("--v", *v, "column multipliers (default all ones)");
        sub->add_option("--eta", *eta, "twist coefficient");
        sub->add_option("--t", *t, "twist");
        sub->add_option("--hook", *h, "hook h (default k-1)");
        sub->add_option("-o,--output", *output, "output code file");
        handlers.emplace_back(sub, [&, kind, p, m, k, alpha, v, eta, t, h, output] {
            const FieldSpec f = FieldSpec::make(*p, *m);
            GrsSpec spec{f, parse_felt_list(f, *alpha), {}, *k};
            if (!v->empty()) spec.v = parse_felt_list(f, *v);
            if (*kind == "grs") {
                emit(out, *output, write_code(grs(spec)));
            } else {
                if (*eta >= f.q()) throw Error(Errc::InvalidSpec, "eta out of range");
                const std::size_t hook = h->value_or(*k == 0 ? 0 : *k - 1);
                emit(out, *output, write_code(tgrs(TgrsSpec{spec, Felt{*eta}, *t, hook})));
            }
            return kOk;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        for (auto& [sub, run] : handlers) {
            if (sub->parsed()) return run();
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ecpkit
