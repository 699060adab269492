#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacksym/jack.hpp"
#include "jacksym/json_io.hpp"
#include "jacksym/localization.hpp"
#include "jacksym/verify.hpp"

namespace {

using jacksym::AlphaPoly;
using jacksym::Basis;
using jacksym::BigRat;
using jacksym::CheckReport;
using jacksym::EulerClass;
using jacksym::FixedPointData;
using jacksym::Partition;
using jacksym::RatFun;
using jacksym::SymFunc;
using ordered_json = nlohmann::ordered_json;

struct AlphaMode {
    bool symbolic = true;
    BigRat value;

    std::string label() const { return symbolic ? "symbolic" : value.to_string(); }
};

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t consumed = 0;
        int value = 0;
        try {
            value = std::stoi(token, &consumed);
        } catch (const std::exception&) {
            throw jacksym::ParseError("invalid partition part \"" + token + "\"");
        }
        if (consumed != token.size())
            throw jacksym::ParseError("invalid partition part \"" + token + "\"");
        parts.push_back(value);
    }
    try {
        return Partition::from_unsorted(std::move(parts));
    } catch (const std::invalid_argument& ex) {
        throw jacksym::ParseError(ex.what());
    }
}

AlphaMode parse_alpha(const std::string& text) {
    AlphaMode mode;
    if (text == "symbolic") return mode;
    mode.symbolic = false;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            mode.value = BigRat::from_strings(text, "1");
        else
            mode.value = BigRat::from_strings(text.substr(0, slash), text.substr(slash + 1));
    } catch (const jacksym::DivisionByZero&) {
        throw jacksym::ParseError("alpha denominator is zero");
    }
    return mode;
}

RatFun specialize(const RatFun& f, const AlphaMode& alpha) {
    if (alpha.symbolic) return f;
    return RatFun(AlphaPoly(f.eval(alpha.value)));
}

SymFunc specialize(const SymFunc& f, const AlphaMode& alpha) {
    if (alpha.symbolic) return f;
    SymFunc out(f.basis());
    for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, specialize(c, alpha));
    return out;
}

EulerClass specialize(const EulerClass& e, const AlphaMode& alpha) {
    return {specialize(e.coeff, alpha), e.u_power};
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string latex_partition(const Partition& lambda) { return lambda.to_string(); }

std::string latex_basis(Basis b) {
    switch (b) {
    case Basis::Monomial: return "m";
    case Basis::PowerSum: return "p";
    case Basis::AugmentedMonomial: return "\\tilde{m}";
    }
    return "?";
}

std::string latex_sym_func(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        if (!c.is_one()) out += "\\left(" + c.to_latex() + "\\right)";
        out += latex_basis(f.basis()) + "_{" + latex_partition(lambda) + "}";
    }
    return out;
}

std::string euler_text(const EulerClass& e) {
    return "(" + e.coeff.to_string() + ")*u^" + std::to_string(e.u_power);
}

// ---- compute ----------------------------------------------------------

struct ComputeRequest {
    std::string what;
    std::vector<Partition> lambdas;
    AlphaMode alpha;
    std::string format;
};

ordered_json rat_fun_node(const RatFun& f) {
    return ordered_json::parse(jacksym::json_io::rat_fun_to_json(f));
}

std::string compute_json(const ComputeRequest& req) {
    ordered_json doc;
    doc["command"] = "compute";
    doc["what"] = req.what;
    doc["alpha"] = req.alpha.label();
    ordered_json entries = ordered_json::array();
    for (const auto& lambda : req.lambdas) {
        ordered_json entry;
        if (req.what == "P" || req.what == "J") {
            const SymFunc f = req.what == "P" ? jacksym::jack_P(lambda) : jacksym::jack_J(lambda);
            entry["partition"] = ordered_json::parse(jacksym::json_io::partition_to_json(lambda));
            entry["function"] =
                ordered_json::parse(jacksym::json_io::sym_func_to_json(specialize(f, req.alpha)));
        } else if (req.what == "norms") {
            entry["partition"] = ordered_json::parse(jacksym::json_io::partition_to_json(lambda));
            entry["norm"] = rat_fun_node(specialize(jacksym::norm_closed_form(lambda), req.alpha));
        } else {
            FixedPointData data = jacksym::euler_classes(lambda);
            data.euler_total = specialize(data.euler_total, req.alpha);
            data.euler_pos = specialize(data.euler_pos, req.alpha);
            data.euler_nonpos = specialize(data.euler_nonpos, req.alpha);
            entry = ordered_json::parse(jacksym::json_io::fixed_point_to_json(data));
        }
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string compute_csv(const ComputeRequest& req) {
    std::ostringstream os;
    if (req.what == "P" || req.what == "J") {
        os << "partition,term,coeff\n";
        for (const auto& lambda : req.lambdas) {
            const SymFunc f = specialize(
                req.what == "P" ? jacksym::jack_P(lambda) : jacksym::jack_J(lambda), req.alpha);
            for (const auto& [mu, c] : f.terms())
                os << csv_field(lambda.to_string()) << "," << csv_field(mu.to_string()) << ","
                   << csv_field(c.to_string()) << "\n";
        }
    } else if (req.what == "norms") {
        os << "partition,norm\n";
        for (const auto& lambda : req.lambdas)
            os << csv_field(lambda.to_string()) << ","
               << csv_field(specialize(jacksym::norm_closed_form(lambda), req.alpha).to_string())
               << "\n";
    } else {
        os << "partition,item,value\n";
        for (const auto& lambda : req.lambdas) {
            FixedPointData data = jacksym::euler_classes(lambda);
            for (const auto& [pq, mult] : data.character.terms)
                os << csv_field(lambda.to_string()) << ",char(" << pq.first << ";" << pq.second
                   << ")," << mult << "\n";
            os << csv_field(lambda.to_string()) << ",euler_total,"
               << csv_field(euler_text(specialize(data.euler_total, req.alpha))) << "\n";
            os << csv_field(lambda.to_string()) << ",euler_pos,"
               << csv_field(euler_text(specialize(data.euler_pos, req.alpha))) << "\n";
            os << csv_field(lambda.to_string()) << ",euler_nonpos,"
               << csv_field(euler_text(specialize(data.euler_nonpos, req.alpha))) << "\n";
        }
    }
    return os.str();
}

std::string compute_latex(const ComputeRequest& req) {
    std::ostringstream os;
    os << "\\begin{tabular}{ll}\n";
    if (req.what == "P" || req.what == "J") {
        os << "$\\lambda$ & $" << (req.what == "P" ? "P_\\lambda" : "J_\\lambda") << "$ \\\\\n"
           << "\\hline\n";
        for (const auto& lambda : req.lambdas) {
            const SymFunc f = specialize(
                req.what == "P" ? jacksym::jack_P(lambda) : jacksym::jack_J(lambda), req.alpha);
            os << "$" << latex_partition(lambda) << "$ & $" << latex_sym_func(f) << "$ \\\\\n";
        }
    } else if (req.what == "norms") {
        os << "$\\lambda$ & $\\langle P_\\lambda, P_\\lambda\\rangle$ \\\\\n\\hline\n";
        for (const auto& lambda : req.lambdas)
            os << "$" << latex_partition(lambda) << "$ & $"
               << specialize(jacksym::norm_closed_form(lambda), req.alpha).to_latex()
               << "$ \\\\\n";
    } else {
        os << "$\\lambda$ & Euler classes \\\\\n\\hline\n";
        for (const auto& lambda : req.lambdas) {
            FixedPointData data = jacksym::euler_classes(lambda);
            os << "$" << latex_partition(lambda) << "$ & $e(T) = \\left("
               << specialize(data.euler_total, req.alpha).coeff.to_latex() << "\\right)u^{"
               << data.euler_total.u_power << "}$, $e(N^{>0}) = \\left("
               << specialize(data.euler_pos, req.alpha).coeff.to_latex() << "\\right)u^{"
               << data.euler_pos.u_power << "}$ \\\\\n";
        }
    }
    os << "\\end{tabular}\n";
    return os.str();
}

int run_compute(const std::string& what, std::optional<int> n,
                std::optional<std::string> partition_arg, const std::string& alpha_arg,
                const std::string& format, int threads) {
    ComputeRequest req;
    req.what = what;
    req.alpha = parse_alpha(alpha_arg);
    req.format = format;
    if (partition_arg) {
        req.lambdas.push_back(parse_partition(*partition_arg));
    } else if (n) {
        if (*n < 0) throw jacksym::ParseError("--n must be nonnegative");
        req.lambdas = jacksym::enumerate_partitions(*n);
    } else {
        throw jacksym::ParseError("compute needs --n or --partition");
    }

    if (threads > 1 && (what == "P" || what == "J" || what == "norms")) {
        int max_weight = 0;
        for (const auto& lambda : req.lambdas) max_weight = std::max(max_weight, lambda.weight());
        jacksym::verify::warm_caches(max_weight, threads);
    }

    std::string out;
    if (format == "json")
        out = compute_json(req);
    else if (format == "csv")
        out = compute_csv(req);
    else
        out = compute_latex(req);
    std::cout << out;
    return 0;
}

// ---- verify ------------------------------------------------------------

std::string report_json(const CheckReport& rep, const std::string& suite, int n) {
    ordered_json doc;
    doc["command"] = "verify";
    doc["suite"] = suite;
    doc["n"] = n;
    doc["passed"] = rep.all_passed();
    doc["checks"] = rep.items.size();
    ordered_json failures = ordered_json::array();
    for (const auto& item : rep.items)
        if (!item.passed) {
            ordered_json f;
            f["name"] = item.name;
            f["detail"] = item.detail;
            failures.push_back(std::move(f));
        }
    doc["failures"] = std::move(failures);
    return doc.dump(2) + "\n";
}

std::string report_text(const CheckReport& rep) {
    std::ostringstream os;
    os << rep.title << "\n";
    os << "checks: " << rep.items.size() << ", passed: " << rep.passed_count() << "\n";
    for (const auto& item : rep.items)
        if (!item.passed) os << "FAIL " << item.name << ": " << item.detail << "\n";
    os << (rep.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string report_csv(const CheckReport& rep) {
    std::ostringstream os;
    os << "name,passed,detail\n";
    for (const auto& item : rep.items)
        os << csv_field(item.name) << "," << (item.passed ? "1" : "0") << ","
           << csv_field(item.detail) << "\n";
    return os.str();
}

int run_verify(const std::string& suite, int n, const std::string& format, int threads) {
    const bool uses_tables = suite == "orthogonality" || suite == "triangularity" ||
                             suite == "norms-bridge" || suite == "positivity" ||
                             suite == "oracle";
    if (threads > 1 && uses_tables) jacksym::verify::warm_caches(n, threads);
    const CheckReport rep = jacksym::verify::run_suite(suite, n);
    std::string out;
    if (format == "json")
        out = report_json(rep, suite, n);
    else if (format == "csv")
        out = report_csv(rep);
    else
        out = report_text(rep);
    std::cout << out;
    return rep.all_passed() ? 0 : 1;
}

// ---- convert -----------------------------------------------------------

int run_convert(const std::string& to_tag) {
    const std::string input{std::istreambuf_iterator<char>(std::cin),
                            std::istreambuf_iterator<char>()};
    const SymFunc f = jacksym::json_io::sym_func_from_json(input);
    const auto target = jacksym::basis_from_tag(to_tag);
    if (!target) throw jacksym::ParseError("unknown basis \"" + to_tag + "\"");
    std::cout << jacksym::json_io::sym_func_to_json(jacksym::convert(f, *target)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for the alpha-deformed orthogonal symmetric polynomials,"
                 " their integral forms, and torus fixed-point Euler data"};
    app.require_subcommand(1);

    std::string what;
    std::optional<int> n_arg;
    std::optional<std::string> partition_arg;
    std::string alpha_arg = "symbolic";
    std::string format = "json";
    int threads = 1;

    auto* compute = app.add_subcommand("compute", "Print tables of exact values");
    compute->add_option("--what", what, "One of P, J, norms, fixedpoint")
        ->required()
        ->check(CLI::IsMember({"P", "J", "norms", "fixedpoint"}));
    auto* n_opt = compute->add_option("--n", n_arg, "All partitions of this weight");
    auto* p_opt =
        compute->add_option("--partition", partition_arg,
                            "Single partition as comma-separated parts; \"\" for the empty one");
    n_opt->excludes(p_opt);
    p_opt->excludes(n_opt);
    compute->add_option("--alpha", alpha_arg, "\"symbolic\" or an exact rational like 1 or 1/2");
    compute->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    compute->add_option("--threads", threads, "Worker threads for table construction")
        ->check(CLI::PositiveNumber);

    std::string suite;
    int verify_n = 6;
    std::string verify_format = "text";
    int verify_threads = 1;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"orthogonality", "triangularity", "norms-bridge", "positivity",
                               "heisenberg", "goettsche", "oracle"}));
    verify->add_option("--n", verify_n, "Degree bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--threads", verify_threads, "Worker threads for table construction")
        ->check(CLI::PositiveNumber);

    std::string to_tag;
    auto* convert = app.add_subcommand("convert", "Convert a JSON element between bases");
    convert->add_option("--to", to_tag, "Target basis")
        ->required()
        ->check(CLI::IsMember({"m", "p", "mtilde"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }

    try {
        if (compute->parsed())
            return run_compute(what, n_arg, partition_arg, alpha_arg, format, threads);
        if (verify->parsed()) return run_verify(suite, verify_n, verify_format, verify_threads);
        return run_convert(to_tag);
    } catch (const jacksym::SpecializationPole& e) {
        std::cerr << "specialization pole: " << e.what() << "\n";
        return 2;
    } catch (const jacksym::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
