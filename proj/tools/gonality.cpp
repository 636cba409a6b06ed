#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gonality/engine.hpp"
#include "gonality/integers.hpp"
#include "gonality/report_io.hpp"
#include "gonality/spec_parse.hpp"

namespace {

using namespace gonality;

constexpr std::uint64_t kDefaultBudget = 10000000;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GONALITY_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error("GONALITY_BUDGET is not a valid node count");
        }
    }
    return kDefaultBudget;
}

ClassNumberTable load_class_numbers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open class-number table: " + path);
    ClassNumberTable table;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream is(line);
        unsigned long n = 0;
        std::string h;
        if (!(is >> n >> h)) continue;  // blank or comment-only line
        table[n] = Int(h);
    }
    return table;
}

void emit(const Json& j, const std::string& text, const std::string& output) {
    if (output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

const char* kCiteText = R"(report field                   mathematical quantity
-----------------------------  ------------------------------------------------------------
group.omega                    multiset of prime-power elementary divisors of A
summand.m_s                    [K(zeta_s) : K], the order of Gal(K(zeta_s)/K) in (Z/sZ)*
summand.t                      integer whose residue mod l generates Gal(K(zeta_l)/K)
summand.ideal_hnf              the ideal (zeta_{m_s} - t, l) of Z[zeta_{m_s}]; its norm is l
summand.candidate_index        |Phi_{m_s}(t)| / l, the index of (zeta_{m_s} - t) in the ideal
summand.search.best_index      min |N(alpha)|/N(ideal) over enumerated alpha in the ideal;
                               an upper bound for min{ |a_s : I| : I principal, I <= a_s }
summand.search.lower_bound     min over primes q of q^(residue degree of q in Q(zeta_{m_s})),
                               a lower bound for the index of any proper sub-ideal
summand.conditional_lower      m_s + 1; conditional on the monomial-unit hypothesis
product_bound                  prod over odd prime powers s of best_index^(n_s); an upper
                               bound for gon(K, A) when every Gal(K(zeta_s)/K) is cyclic
factorial_bound                (|A| - 1)!, from the symmetric-function rational subfield
reported_bound                 min(product_bound, factorial_bound)
rationality                    rational_by_criterion when every obstruction ideal (or its
                               n_s-th power) has a certified generator: K(A)/K is rational
formulas.min_index_*           closed-form bounds for the same minimal principal-ideal index
fischer.exponent_basis         kernel of y_i -> chi_i for the diagonalized regular
                               representation; exponent vectors of free field generators
)";

int run_bound(const std::string& group_spec, const std::string& field_spec,
              unsigned long radius, std::uint64_t budget, const std::string& output,
              const std::string& class_numbers_path) {
    const AbelianGroupSpec group = parse_group(group_spec);
    const FieldSpec field = parse_field(field_spec);
    std::optional<ClassNumberTable> table;
    if (!class_numbers_path.empty()) table = load_class_numbers(class_numbers_path);
    try {
        const GonalityReport rep = gonality_upper_bound(group, field, radius, budget, table);
        emit(bound_report_json(rep), bound_report_text(rep), output);
        return rep.budget_exhausted ? 3 : 0;
    } catch (const HypothesisViolationError& e) {
        emit(violations_json(e.violations), violations_text(e.violations), output);
        return 2;
    }
}

int run_summand(const std::string& s_str, const std::string& field_spec, unsigned long radius,
                std::uint64_t budget, const std::string& output) {
    const Int s(s_str);
    const FieldSpec field = parse_field(field_spec);
    try {
        const SummandReport rep = summand_bound(s, field, radius, budget);
        Json j;
        j["schema_version"] = 1;
        j["command"] = "summand";
        j["field"] = field_json(field);
        j["radius"] = radius;
        j["budget"] = std::to_string(budget);
        j["summand"] = summand_json(rep);
        std::ostringstream text;
        text << "summand report (field " << field_label(field) << ")\n";
        GonalityReport shim;
        shim.summands.push_back(rep);
        // Reuse the bound text block for the single summand.
        const std::string block = bound_report_text(shim);
        const auto start = block.find("summand s=");
        const auto end = block.find("product_bound:");
        text << block.substr(start, end - start);
        emit(j, text.str(), output);
        return rep.budget_exhausted ? 3 : 0;
    } catch (const HypothesisViolationError& e) {
        emit(violations_json(e.violations), violations_text(e.violations), output);
        return 2;
    }
}

int run_primroot(const std::string& p_str, const std::string& criterion,
                 const std::string& output) {
    const Int p(p_str);
    const RootCriterion crit = criterion == "least_positive" ? RootCriterion::least_positive
                                                             : RootCriterion::least_absolute;
    const PrimitiveRootResult r = least_primitive_root(p, crit);
    Json j;
    j["schema_version"] = 1;
    j["command"] = "primroot";
    j["p"] = r.p.get_str();
    j["t"] = r.t.get_str();
    j["criterion"] = criterion;
    std::ostringstream text;
    text << "least primitive root mod " << r.p.get_str() << " (" << criterion
         << "): " << r.t.get_str() << "\n";
    emit(j, text.str(), output);
    return 0;
}

int run_scan(const std::string& limit_str, const std::string& output) {
    const Int limit(limit_str);
    const auto rows = primitive_root_bound_scan(limit);
    Json j;
    j["schema_version"] = 1;
    j["command"] = "scan";
    j["limit"] = limit.get_str();
    Json list = Json::array();
    std::ostringstream text;
    text << "p  |g(p)|  4g^2<=p\n";
    for (const ScanRow& r : rows) {
        Json e;
        e["p"] = r.p.get_str();
        e["abs_root"] = r.abs_root.get_str();
        e["satisfies"] = r.satisfies;
        list.push_back(e);
        text << r.p.get_str() << "  " << r.abs_root.get_str() << "  "
             << (r.satisfies ? "yes" : "no") << "\n";
    }
    j["rows"] = list;
    emit(j, text.str(), output);
    return 0;
}

int run_fischer(const std::string& group_spec, unsigned long cap, const std::string& output) {
    const AbelianGroupSpec group = parse_group(group_spec);
    const FischerResult r = fischer_generators(group, cap);
    Json j;
    j["schema_version"] = 1;
    j["command"] = "fischer";
    j["group"] = group_json(group);
    Json rows = Json::array();
    std::ostringstream text;
    text << "free-generator exponent basis for " << group_label(group) << " (rank "
         << r.exponent_basis.rank() << ")\n";
    for (std::size_t i = 0; i < r.exponent_basis.rank(); ++i) {
        Json row = Json::array();
        text << "  ";
        for (std::size_t c = 0; c < r.exponent_basis.ambient_rank; ++c) {
            row.push_back(r.exponent_basis.basis.at(i, c).get_str());
            text << r.exponent_basis.basis.at(i, c).get_str()
                 << (c + 1 < r.exponent_basis.ambient_rank ? " " : "");
        }
        rows.push_back(row);
        text << "\n";
    }
    j["exponent_basis"] = rows;
    j["index"] = r.index.get_str();
    text << "index: " << r.index.get_str() << "\n";
    emit(j, text.str(), output);
    return 0;
}

std::vector<Int> parse_coeff_list(const std::string& raw) {
    std::vector<Int> coeffs;
    std::string item;
    std::istringstream is(raw);
    while (std::getline(is, item, ',')) {
        std::string trimmed;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) throw Error("empty coefficient in generator list");
        coeffs.emplace_back(trimmed);
    }
    if (coeffs.empty()) throw Error("empty generator");
    return coeffs;
}

int run_ideal(unsigned long m, const std::vector<std::string>& gen_strs, bool do_search,
              unsigned long radius, std::uint64_t budget, const std::string& output) {
    const unsigned long n = phi_ul(m);
    std::vector<CyclotomicElement> gens;
    for (const std::string& g : gen_strs) {
        std::vector<Int> coeffs = parse_coeff_list(g);
        if (coeffs.size() > n) throw Error("generator has more than phi(m) coefficients");
        coeffs.resize(n);
        gens.push_back(CyclotomicElement{m, std::move(coeffs)});
    }
    const CyclotomicIdeal ideal = ideal_from_generators(gens);
    Json j;
    j["schema_version"] = 1;
    j["command"] = "ideal";
    j["m"] = m;
    j["norm"] = ideal_norm(ideal).get_str();
    j["min_cofactor_norm"] = min_cofactor_norm(m).get_str();
    Json rows = Json::array();
    for (std::size_t i = 0; i < ideal.lattice.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < ideal.lattice.ambient_rank; ++c)
            row.push_back(ideal.lattice.basis.at(i, c).get_str());
        rows.push_back(row);
    }
    j["hnf"] = rows;
    std::ostringstream text;
    text << "ideal in Z[zeta_" << m << "], norm " << ideal_norm(ideal).get_str()
         << ", min cofactor norm " << min_cofactor_norm(m).get_str() << "\n";
    int code = 0;
    if (do_search) {
        SearchOutcome outcome;
        try {
            outcome = min_principal_index(ideal, radius, budget);
        } catch (const BudgetExhaustedError& e) {
            outcome = e.partial;
            code = 3;
        }
        j["search"] = search_outcome_json(outcome);
        text << "search: best_index=" << outcome.best_index.get_str()
             << (outcome.certified ? " (certified)" : " (not certified)")
             << " lower_bound=" << outcome.lower_bound.get_str()
             << " nodes=" << outcome.nodes_visited << "\n";
        if (outcome.witness) text << "witness: " << element_str(*outcome.witness) << "\n";
    }
    emit(j, text.str(), output);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds for the gonality of abelian quotient varieties over cyclotomic fields"};
    app.require_subcommand(0, 1);

    bool cite = false;
    app.add_flag("--cite", cite, "print the mapping from report fields to formulas");

    std::string group_spec, field_spec = "Q", output = "text", class_numbers_path;
    std::string s_str, p_str, limit_str, criterion = "least_absolute";
    unsigned long radius = 2, cap = 64, ideal_m = 1;
    std::uint64_t budget = 0;  // resolved after parsing (env, then flag)
    bool budget_given = false, ideal_search = false;
    std::vector<std::string> gens;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        if (with_field) cmd->add_option("--field", field_spec, "base field: Q or Q(zeta_n)");
        cmd->add_option("--radius", radius, "coefficient box radius for searches");
        cmd->add_option("--budget", budget, "node budget for searches")
            ->each([&](const std::string&) { budget_given = true; });
        cmd->add_option("--output", output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* bound = app.add_subcommand("bound", "gonality upper bound for a finite abelian group");
    bound->add_option("--group", group_spec, "abelian group, e.g. \"Z/9 + Z/3\"")->required();
    bound->add_option("--class-numbers", class_numbers_path,
                      "two-column table \"n h_n\" of class numbers");
    add_common(bound);

    CLI::App* summand = app.add_subcommand("summand", "single obstruction-ideal report");
    summand->add_option("--s", s_str, "odd prime power")->required();
    add_common(summand);

    CLI::App* primroot = app.add_subcommand("primroot", "least primitive root modulo p");
    primroot->add_option("--p", p_str, "odd prime")->required();
    primroot->add_option("--criterion", criterion, "least_positive or least_absolute")
        ->check(CLI::IsMember({"least_positive", "least_absolute"}));
    primroot->add_option("--output", output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* ideal_cmd = app.add_subcommand("ideal", "inspect an ideal of Z[zeta_m]");
    ideal_cmd->add_option("--m", ideal_m, "cyclotomic index m")->required();
    ideal_cmd
        ->add_option("--gen", gens,
                     "generator as comma-separated power-basis coefficients, low to high")
        ->required();
    ideal_cmd->add_flag("--search", ideal_search, "run the minimal-index search");
    add_common(ideal_cmd, false);

    CLI::App* fischer = app.add_subcommand("fischer", "free-generator exponent lattice");
    fischer->add_option("--group", group_spec, "abelian group spec")->required();
    fischer->add_option("--cap", cap, "largest allowed group order");
    fischer->add_option("--output", output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* scan = app.add_subcommand("scan", "least-absolute primitive roots up to a limit");
    scan->add_option("--limit", limit_str, "scan odd primes p <= limit")->required();
    scan->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cite) {
            std::cout << kCiteText;
            return 0;
        }
        if (!budget_given) budget = default_budget();
        if (bound->parsed())
            return run_bound(group_spec, field_spec, radius, budget, output, class_numbers_path);
        if (summand->parsed()) return run_summand(s_str, field_spec, radius, budget, output);
        if (primroot->parsed()) return run_primroot(p_str, criterion, output);
        if (ideal_cmd->parsed())
            return run_ideal(ideal_m, gens, ideal_search, radius, budget, output);
        if (fischer->parsed()) return run_fischer(group_spec, cap, output);
        if (scan->parsed()) return run_scan(limit_str, output);
        std::cout << app.help();
        return 0;
    } catch (const gonality::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
