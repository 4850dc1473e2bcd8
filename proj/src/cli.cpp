#include <etacong/cli.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include <etacong/congruence.hpp>
#include <etacong/eta_quotient.hpp>
#include <etacong/eta_spec.hpp>
#include <etacong/partitions.hpp>

namespace etacong
{

namespace
{

enum class Format { text, machine };

struct Options {
    Format format = Format::text;
    std::string spec;
    std::string rhs_spec;
    std::optional<std::int64_t> terms;
    std::optional<std::int64_t> modulus;
    std::optional<std::int64_t> prime;
    std::int64_t residue = 0;
    std::int64_t weight = 0;
    std::int64_t level = 0;
    std::int64_t k = 0;
};

void add_format(CLI::App *cmd, Options &opt)
{
    cmd->add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
                                                                          {"machine", Format::machine}}));
}

void add_terms(CLI::App *cmd, Options &opt, const std::string &help)
{
    cmd->add_option("-T,--terms", opt.terms, help)->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20));
}

void add_modulus(CLI::App *cmd, Options &opt, bool required)
{
    auto *o = cmd->add_option("-M,--modulus", opt.modulus, "Coefficient modulus (>= 2)")
                  ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));
    if (required) {
        o->required();
    }
}

void print_series(std::ostream &out, Format fmt, const std::string &label, const TruncatedSeries &f)
{
    if (fmt == Format::machine) {
        out << "series=" << label << "\n";
        out << "lead=" << f.lead() << "\n";
        out << "trunc=" << f.trunc() << "\n";
        if (!f.domain().is_exact()) {
            out << "modulus=" << f.domain().modulus() << "\n";
        }
        for (Exponent n = f.lead(); n <= f.trunc(); ++n) {
            out << "a(" << n << ")=" << f.coeff(n) << "\n";
        }
        return;
    }
    out << "# " << label << ", coefficients up to q^" << f.trunc();
    if (!f.domain().is_exact()) {
        out << " mod " << f.domain().modulus();
    }
    out << "\n";
    for (Exponent n = f.lead(); n <= f.trunc(); ++n) {
        out << n << ": " << f.coeff(n) << "\n";
    }
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string character_name(const CharacterData &c)
{
    if (c.discriminant == 1) {
        return "trivial";
    }
    return "(" + c.discriminant.get_str() + "/d)";
}

void print_report(std::ostream &out, Format fmt, const EtaQuotient &eq, const ModularityReport &r, bool cusps_only)
{
    const auto &c = r.conditions;
    if (fmt == Format::machine) {
        out << "spec=" << eq.to_spec() << "\n";
        out << "weight_twice=" << c.weight_twice << "\n";
        out << "weight=" << c.weight().get_str() << "\n";
        out << "sum_delta_r=" << c.sum_delta_r << "\n";
        out << "sum_Nover_delta_r=" << c.sum_level_over_delta_r << "\n";
        out << "condition_24_a=" << std::boolalpha << c.condition_24_a << "\n";
        out << "condition_24_b=" << c.condition_24_b << "\n";
        out << "weight_integral=" << c.weight_integral << "\n";
        if (r.character) {
            out << "s_numerator=" << r.character->s.get_num() << "\n";
            out << "s_denominator=" << r.character->s.get_den() << "\n";
            out << "character_discriminant=" << r.character->discriminant << "\n";
        }
        for (const auto &[d, order] : r.cusp_orders) {
            out << "cusp_order." << d << "=" << order.get_str() << "\n";
        }
        out << "holomorphic_at_all_cusps=" << r.holomorphic_at_all_cusps << std::noboolalpha << "\n";
        return;
    }
    out << "eta-quotient " << eq.to_spec() << "\n";
    if (!cusps_only) {
        out << "  weight k                : " << c.weight().get_str() << (c.weight_integral ? "" : " (half-integral)")
            << "\n";
        out << "  sum delta*r_delta       : " << c.sum_delta_r << "  (0 mod 24: " << yes_no(c.condition_24_a)
            << ")\n";
        out << "  sum (N/delta)*r_delta   : " << c.sum_level_over_delta_r
            << "  (0 mod 24: " << yes_no(c.condition_24_b) << ")\n";
        out << "  modularity conditions   : " << (c.satisfied() ? "satisfied" : "NOT satisfied") << "\n";
        if (r.character) {
            out << "  s = prod delta^r_delta  : " << r.character->s.get_str() << "\n";
            out << "  character chi(d)        : " << character_name(*r.character) << "\n";
        }
    }
    out << "  cusp orders (cusp c/d, by denominator d):\n";
    for (const auto &[d, order] : r.cusp_orders) {
        out << "    d=" << d << ": " << order.get_str() << (sgn(order) < 0 ? "  (pole)" : "") << "\n";
    }
    out << "  holomorphic at all cusps: " << yes_no(r.holomorphic_at_all_cusps) << "\n";
}

void print_sturm(std::ostream &out, Format fmt, const SturmData &s)
{
    if (fmt == Format::machine) {
        out << "weight=" << s.weight << "\nlevel=" << s.level << "\nindex=" << s.index << "\nbound=" << s.bound
            << "\n";
        return;
    }
    out << "Sturm bound for weight " << s.weight << " on Gamma0(" << s.level << ")\n";
    out << "  [SL2(Z):Gamma0(N)] : " << s.index << "\n";
    out << "  bound              : " << s.bound << "\n";
}

int print_certificate(std::ostream &out, Format fmt, const CongruenceCertificate &cert)
{
    out << (fmt == Format::machine ? to_machine(cert) : to_text(cert));
    return cert.verdict ? exit_ok : exit_verdict_false;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series, eta-quotient and Sturm-bound congruence toolkit", "etacong"};
    app.require_subcommand(1);
    Options opt;
    std::function<int()> action;

    auto *expand_cmd = app.add_subcommand("expand", "Print the q-expansion of an eta-quotient");
    expand_cmd->add_option("spec", opt.spec, "EtaSpec, e.g. \"N=56; 1:-3 2:1 7:9 14:-1\"")->required();
    add_terms(expand_cmd, opt, "Truncation order (default 20)");
    add_modulus(expand_cmd, opt, false);
    add_format(expand_cmd, opt);
    expand_cmd->callback([&] {
        action = [&] {
            const auto eq = parse_eta_spec(opt.spec);
            auto series = expand(eq, opt.terms.value_or(20));
            if (opt.modulus) {
                series = reduce_mod(series, *opt.modulus);
            }
            print_series(out, opt.format, eq.to_spec(), series);
            return int{exit_ok};
        };
    });

    auto *modularity_cmd = app.add_subcommand("check-modularity", "Modularity conditions, character and cusp orders");
    modularity_cmd->add_option("spec", opt.spec, "EtaSpec")->required();
    add_format(modularity_cmd, opt);
    modularity_cmd->callback([&] {
        action = [&] {
            const auto eq = parse_eta_spec(opt.spec);
            print_report(out, opt.format, eq, holomorphy_report(eq), false);
            return int{exit_ok};
        };
    });

    auto *cusps_cmd = app.add_subcommand("cusp-orders", "Orders of vanishing at the cusps of Gamma0(N)");
    cusps_cmd->add_option("spec", opt.spec, "EtaSpec")->required();
    add_format(cusps_cmd, opt);
    cusps_cmd->callback([&] {
        action = [&] {
            const auto eq = parse_eta_spec(opt.spec);
            print_report(out, opt.format, eq, holomorphy_report(eq), true);
            return int{exit_ok};
        };
    });

    auto *sturm_cmd = app.add_subcommand("sturm", "Sturm bound for weight k on Gamma0(N)");
    sturm_cmd->add_option("-k,--weight", opt.weight, "Weight")->required()->check(CLI::PositiveNumber);
    sturm_cmd->add_option("-N,--level", opt.level, "Level")->required()->check(CLI::PositiveNumber);
    add_format(sturm_cmd, opt);
    sturm_cmd->callback([&] {
        action = [&] {
            print_sturm(out, opt.format, sturm_bound(opt.weight, opt.level));
            return int{exit_ok};
        };
    });

    auto *delta_cmd = app.add_subcommand("delta", "Broken k-diamond counts Delta_k(n), optionally along p n + r");
    delta_cmd->add_option("-k", opt.k, "Family parameter k")->required()->check(CLI::PositiveNumber);
    add_terms(delta_cmd, opt, "Last n printed (default 20)");
    add_modulus(delta_cmd, opt, false);
    delta_cmd->add_option("-p,--prime", opt.prime, "Progression step p (prints Delta_k(p n + r))")
        ->check(CLI::PositiveNumber);
    delta_cmd->add_option("-r,--residue", opt.residue, "Progression offset r, 0 <= r < p")
        ->check(CLI::NonNegativeNumber);
    add_format(delta_cmd, opt);
    delta_cmd->callback([&] {
        action = [&] {
            const auto n_max = opt.terms.value_or(20);
            const auto step = opt.prime.value_or(1);
            const auto fam = broken_diamond_gf(opt.k, step * n_max + opt.residue);
            auto series = progression_series(fam, step, opt.residue);
            if (opt.modulus) {
                series = reduce_mod(series, *opt.modulus);
            }
            std::string label = "Delta_" + std::to_string(opt.k) + "(";
            label += step == 1 && opt.residue == 0
                         ? std::string("n)")
                         : std::to_string(step) + "n+" + std::to_string(opt.residue) + ")";
            print_series(out, opt.format, label, series);
            return int{exit_ok};
        };
    });

    auto *thm1_cmd = app.add_subcommand("verify-thm1", "Certify prod(1-q^n)^4(1-q^2n)^6 == 6 sum Delta_3(7n+5)q^n mod 7");
    add_terms(thm1_cmd, opt, "Coefficients to check (default 200; at least the Sturm bound 25)");
    add_format(thm1_cmd, opt);
    thm1_cmd->callback([&] {
        action = [&] { return print_certificate(out, opt.format, verify_delta3_mod7(opt.terms.value_or(default_depth_delta3))); };
    });

    auto *thm2_cmd =
        app.add_subcommand("verify-thm2", "Certify E4(q^2)prod(1-q^n)^8(1-q^2n)^2 == 8 sum Delta_5(11n+6)q^n mod 11");
    add_terms(thm2_cmd, opt, "Coefficients to check (default 488; at least the Sturm bound 61)");
    add_format(thm2_cmd, opt);
    thm2_cmd->callback([&] {
        action = [&] {
            return print_certificate(out, opt.format, verify_delta5_mod11(opt.terms.value_or(default_depth_delta5)));
        };
    });

    auto *verify_cmd = app.add_subcommand("verify", "Check (lhs)|U_p == rhs mod M up to the Sturm bound");
    verify_cmd->add_option("lhs", opt.spec, "Eta expression, e.g. \"6*[N=56; 1:-3 2:1 7:9 14:-1]\"")->required();
    verify_cmd->add_option("rhs", opt.rhs_spec, "Eta expression")->required();
    verify_cmd->add_option("-p,--prime", opt.prime, "Apply U_p to the left side");
    add_modulus(verify_cmd, opt, true);
    verify_cmd->add_option("-k,--weight", opt.weight, "Weight")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("-N,--level", opt.level, "Level")->required()->check(CLI::PositiveNumber);
    add_terms(verify_cmd, opt, "Coefficients to check (default: the Sturm bound)");
    add_format(verify_cmd, opt);
    verify_cmd->callback([&] {
        action = [&] {
            GeneralQuery query;
            query.lhs = parse_eta_expression(opt.spec);
            query.rhs = parse_eta_expression(opt.rhs_spec);
            query.prime = opt.prime;
            query.modulus = *opt.modulus;
            query.weight = opt.weight;
            query.level = opt.level;
            query.depth = opt.terms.value_or(0);
            return print_certificate(out, opt.format, verify_general(query));
        };
    });

    try {
        // CLI11 consumes its argument vector back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? int{exit_ok} : int{exit_usage};
    }

    try {
        return action();
    } catch (const ChainIdentityError &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace etacong
