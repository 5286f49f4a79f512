#include "gerst/cli.hpp"

#include <filesystem>
#include <map>
#include <ostream>

#include "gerst/hopf_io.hpp"

namespace gerst {

namespace {

const char* kUsage = R"(usage: gerst <command> [args]

commands:
  algebras list                     print the built-in algebra specs
  verify <alg-or-file>              run the Hopf axiom checker, report verdict
  cohomology <alg>                  per-degree dims and cocycle bases
      --coefficients trivial|adjoint   (default trivial)
      --max-degree N                   (default 2)
      --override-degree-cap            allow degrees beyond the size policy
  double <alg> --out FILE           construct the Drinfeld double, write it
  check thm2|thm3|comm|bracket <alg>
      [--p P] [--q Q] [--max-degree N] [--trials T] [--seed S]
  export <builtin> --out FILE       write a built-in as a Hopf file

common flags:
  --field p|Q        base field for built-ins (a prime, or Q; default Q)
  --format text|json report rendering (default text)
  --skip-validation  do not run the axiom checker on imported files

exit codes: 0 success/pass, 1 check verdict fail, 2 usage/resource errors
)";

struct ParsedArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
    bool has(const std::string& f) const { return flags.count(f) != 0; }
    std::string get(const std::string& f, const std::string& dflt) const {
        auto it = flags.find(f);
        return it == flags.end() ? dflt : it->second;
    }
};

const std::vector<std::string> kValueFlags = {"--field",  "--format",     "--coefficients",
                                              "--max-degree", "--out",    "--p",
                                              "--q",      "--trials",     "--seed"};
const std::vector<std::string> kBoolFlags = {"--skip-validation", "--override-degree-cap"};

ParsedArgs parse_args(const std::vector<std::string>& args, std::size_t from) {
    ParsedArgs p;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            if (std::find(kBoolFlags.begin(), kBoolFlags.end(), a) != kBoolFlags.end()) {
                p.flags[a] = "1";
            } else if (std::find(kValueFlags.begin(), kValueFlags.end(), a) !=
                       kValueFlags.end()) {
                if (i + 1 >= args.size()) throw InvalidInputError("flag " + a + " needs a value");
                p.flags[a] = args[++i];
            } else {
                throw InvalidInputError("unknown flag " + a);
            }
        } else {
            p.positional.push_back(a);
        }
    }
    return p;
}

FieldSpec parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return FieldSpec::rational();
    try {
        unsigned long v = std::stoul(s);
        return FieldSpec::prime(static_cast<std::uint32_t>(v));
    } catch (const InvalidInputError&) {
        throw;
    } catch (...) {
        throw InvalidInputError("bad --field value '" + s + "' (want a prime or Q)");
    }
}

std::size_t parse_size(const std::string& s, const std::string& what) {
    try {
        return static_cast<std::size_t>(std::stoull(s));
    } catch (...) {
        throw InvalidInputError("bad " + what + " value '" + s + "'");
    }
}

Scalar parse_scalar_flexible(const FieldSpec& f, const std::string& s) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size()) return Scalar(f, v);
    } catch (...) {
    }
    return Scalar::parse(f, s);
}

}  // namespace

HopfPtr resolve_algebra(const std::string& spec, const FieldSpec& field,
                        bool validate_files) {
    if (spec.rfind("dual:", 0) == 0)
        return dual_hopf(*resolve_algebra(spec.substr(5), field, validate_files));
    if (spec.rfind("double:", 0) == 0)
        return drinfeld_double(*resolve_algebra(spec.substr(7), field, validate_files))
            .underlying;
    if (spec == "Z/2" || spec == "z2") return group_algebra(cyclic_table(2), field, "Z/2");
    if (spec == "Z/3" || spec == "z3") return group_algebra(cyclic_table(3), field, "Z/3");
    if (spec == "Z/4" || spec == "z4") return group_algebra(cyclic_table(4), field, "Z/4");
    if (spec == "S3" || spec == "s3") return group_algebra(symmetric3_table(), field, "S3");
    if (spec == "sweedler") return sweedler_algebra(field);
    if (spec.rfind("taft:", 0) == 0) {
        std::string rest = spec.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw InvalidInputError("taft spec wants taft:<n>:<q>, got '" + spec + "'");
        std::size_t n = parse_size(rest.substr(0, colon), "taft n");
        Scalar q = parse_scalar_flexible(field, rest.substr(colon + 1));
        return taft_algebra(n, q, field);
    }
    if (std::filesystem::exists(spec)) return parse_hopf(spec, validate_files);
    throw InvalidInputError("unknown algebra '" + spec +
                            "' (see `gerst algebras list`; files must exist)");
}

namespace {

int cmd_algebras(const ParsedArgs& p, std::ostream& out) {
    if (p.positional.empty() || p.positional[0] != "list")
        throw InvalidInputError("usage: gerst algebras list");
    out << "Z/2 Z/3 Z/4        group algebras of cyclic groups\n"
        << "S3                 group algebra of the symmetric group on 3 letters\n"
        << "taft:<n>:<q>       Taft algebra, q a primitive n-th root of unity\n"
        << "sweedler           the 4-dimensional Taft algebra taft:2:-1\n"
        << "dual:<alg>         dual Hopf algebra\n"
        << "double:<alg>       Drinfeld double\n"
        << "<path>             a Hopf structure-constants file\n";
    return 0;
}

int cmd_verify(const ParsedArgs& p, std::ostream& out) {
    if (p.positional.size() != 1) throw InvalidInputError("usage: gerst verify <alg-or-file>");
    FieldSpec field = parse_field(p.get("--field", "Q"));
    // parse files without validation so the report carries the failures
    HopfPtr h = resolve_algebra(p.positional[0], field, false);
    AxiomReport rep = check_hopf_axioms(*h);
    if (p.get("--format", "text") == "json")
        out << canonical_dump(to_json(rep));
    else
        out << render_text(rep) << "dim " << h->dim << " over " << h->field.to_string() << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_cohomology(const ParsedArgs& p, std::ostream& out) {
    if (p.positional.size() != 1) throw InvalidInputError("usage: gerst cohomology <alg>");
    FieldSpec field = parse_field(p.get("--field", "Q"));
    HopfPtr h = resolve_algebra(p.positional[0], field, !p.has("--skip-validation"));
    std::string coeff = p.get("--coefficients", "trivial");
    if (coeff != "trivial" && coeff != "adjoint")
        throw InvalidInputError("--coefficients must be trivial or adjoint");
    std::size_t maxd = parse_size(p.get("--max-degree", "2"), "--max-degree");
    CohomologyReport rep =
        cohomology(h, coeff == "trivial" ? Coefficients::Trivial : Coefficients::Adjoint,
                   maxd, p.has("--override-degree-cap"));
    if (p.get("--format", "text") == "json")
        out << canonical_dump(to_json(rep));
    else
        out << render_text(rep);
    return 0;
}

int cmd_double(const ParsedArgs& p, std::ostream& out) {
    if (p.positional.size() != 1 || !p.has("--out"))
        throw InvalidInputError("usage: gerst double <alg> --out FILE");
    FieldSpec field = parse_field(p.get("--field", "Q"));
    HopfPtr h = resolve_algebra(p.positional[0], field, !p.has("--skip-validation"));
    DoubleData d = drinfeld_double(*h);
    write_hopf(*d.underlying, p.flags.at("--out"), d.provenance);
    out << "wrote " << d.underlying->name << " (dim " << d.underlying->dim << ") to "
        << p.flags.at("--out") << "\n";
    return 0;
}

int cmd_export(const ParsedArgs& p, std::ostream& out) {
    if (p.positional.size() != 1 || !p.has("--out"))
        throw InvalidInputError("usage: gerst export <builtin> --out FILE");
    FieldSpec field = parse_field(p.get("--field", "Q"));
    const std::string& spec = p.positional[0];
    HopfPtr h = resolve_algebra(spec, field, true);
    std::optional<std::string> prov;
    if (spec.rfind("double:", 0) == 0) prov = spec.substr(7);
    write_hopf(*h, p.flags.at("--out"), prov);
    out << "wrote " << h->name << " (dim " << h->dim << ") to " << p.flags.at("--out") << "\n";
    return 0;
}

int cmd_check(const ParsedArgs& p, std::ostream& out) {
    if (p.positional.size() != 2)
        throw InvalidInputError("usage: gerst check thm2|thm3|comm|bracket <alg>");
    const std::string& which = p.positional[0];
    FieldSpec field = parse_field(p.get("--field", "Q"));
    HopfPtr h = resolve_algebra(p.positional[1], field, !p.has("--skip-validation"));
    std::size_t maxd = parse_size(p.get("--max-degree", "2"), "--max-degree");
    std::size_t dp = parse_size(p.get("--p", "1"), "--p");
    std::size_t dq = parse_size(p.get("--q", "1"), "--q");
    std::size_t trials = parse_size(p.get("--trials", "20"), "--trials");
    std::uint64_t seed = parse_size(p.get("--seed", "1"), "--seed");

    CheckReport rep;
    if (which == "thm2")
        rep = check_thm2(h, maxd, trials, seed);
    else if (which == "thm3")
        rep = check_thm3(h, dp, dq, trials, seed);
    else if (which == "comm")
        rep = check_commutativity(h, dp, dq, trials, seed);
    else if (which == "bracket")
        rep = check_bracket_structure(h, dp, dq, trials, seed);
    else
        throw InvalidInputError("unknown check '" + which +
                                "' (want thm2, thm3, comm or bracket)");
    if (p.get("--format", "text") == "json")
        out << canonical_dump(to_json(rep));
    else
        out << render_text(rep);
    return rep.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 2;
        }
        const std::string& cmd = args[0];
        ParsedArgs parsed = parse_args(args, 1);
        if (cmd == "algebras") return cmd_algebras(parsed, out);
        if (cmd == "verify") return cmd_verify(parsed, out);
        if (cmd == "cohomology") return cmd_cohomology(parsed, out);
        if (cmd == "double") return cmd_double(parsed, out);
        if (cmd == "export") return cmd_export(parsed, out);
        if (cmd == "check") return cmd_check(parsed, out);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            out << kUsage;
            return 0;
        }
        err << "unknown command '" << cmd << "'\n" << kUsage;
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gerst
