#include "gonality/report_io.hpp"

#include <sstream>

#include "gonality/spec_parse.hpp"

namespace gonality {

std::string element_str(const CyclotomicElement& e) {
    std::string out;
    for (std::size_t i = e.coeffs.size(); i-- > 0;) {
        const Int& c = e.coeffs[i];
        if (c == 0) continue;
        const bool first = out.empty();
        const Int a = abs(c);
        if (c < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += i == 1 ? "zeta" : "zeta^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

Json element_json(const CyclotomicElement& e) {
    Json coeffs = Json::array();
    for (const Int& c : e.coeffs) coeffs.push_back(c.get_str());
    return coeffs;
}

Json search_outcome_json(const SearchOutcome& s) {
    Json j;
    j["best_index"] = s.best_index.get_str();
    j["witness"] = s.witness ? element_json(*s.witness) : Json(nullptr);
    j["witness_str"] = s.witness ? Json(element_str(*s.witness)) : Json(nullptr);
    j["certified"] = s.certified;
    j["lower_bound"] = s.lower_bound.get_str();
    j["nodes_visited"] = std::to_string(s.nodes_visited);
    return j;
}

Json summand_json(const SummandReport& r) {
    Json j;
    j["s"] = r.s.get_str();
    j["l"] = r.l.get_str();
    j["u"] = r.u;
    j["m_s"] = r.m_s;
    j["t"] = r.t ? Json(r.t->get_str()) : Json(nullptr);
    if (r.frak_a) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < r.frak_a->lattice.rank(); ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < r.frak_a->lattice.ambient_rank; ++c)
                row.push_back(r.frak_a->lattice.basis.at(i, c).get_str());
            rows.push_back(row);
        }
        j["ideal_hnf"] = rows;
    } else {
        j["ideal_hnf"] = nullptr;
    }
    j["norm_check"] = r.norm_check;
    j["candidate_index"] = r.candidate_index.get_str();
    j["search"] = r.search ? search_outcome_json(*r.search) : Json(nullptr);
    j["n_s"] = r.n_s;
    j["principal"] = r.principal == PrincipalVerdict::yes ? "yes" : "no_within_bound";
    j["power_principal"] = r.power_principal ? Json(*r.power_principal) : Json(nullptr);
    j["conditional_lower"] =
        r.conditional_lower ? Json(r.conditional_lower->get_str()) : Json(nullptr);
    j["tag"] = r.tag;
    j["budget_exhausted"] = r.budget_exhausted;
    return j;
}

Json group_json(const AbelianGroupSpec& a) {
    Json j;
    j["label"] = group_label(a);
    Json factors = Json::array();
    for (const Int& f : a.invariant_factors) factors.push_back(f.get_str());
    j["invariant_factors"] = factors;
    j["order"] = a.order.get_str();
    Json omega = Json::array();
    for (const OmegaEntry& e : a.omega) {
        Json o;
        o["s"] = e.s.get_str();
        o["l"] = e.l.get_str();
        o["u"] = e.u;
        o["multiplicity"] = e.multiplicity;
        omega.push_back(o);
    }
    j["omega"] = omega;
    return j;
}

Json field_json(const FieldSpec& k) {
    Json j;
    j["label"] = field_label(k);
    j["n"] = k.n;
    return j;
}

Json bound_report_json(const GonalityReport& rep) {
    Json j;
    j["schema_version"] = 1;
    j["command"] = "bound";
    j["group"] = group_json(rep.group);
    j["field"] = field_json(rep.field);
    j["radius"] = rep.radius;
    j["budget"] = std::to_string(rep.budget);
    Json summands = Json::array();
    for (const SummandReport& s : rep.summands) summands.push_back(summand_json(s));
    j["summands"] = summands;
    j["product_bound"] = rep.product_bound.get_str();
    j["factorial_bound"] = rep.factorial_bound.get_str();
    j["reported_bound"] = rep.reported_bound.get_str();
    j["rationality"] =
        rep.rationality == Rationality::rational_by_criterion ? "rational_by_criterion"
                                                              : "unknown";
    j["budget_exhausted"] = rep.budget_exhausted;
    Json formulas = Json::array();
    for (const FormulaEntry& f : rep.formulas) {
        Json e;
        e["name"] = f.name;
        e["value"] = f.value;
        e["caveat"] = f.caveat;
        formulas.push_back(e);
    }
    j["formulas"] = formulas;
    j["notes"] = rep.notes;
    return j;
}

namespace {

std::string search_outcome_text(const SearchOutcome& s, const std::string& indent) {
    std::ostringstream os;
    os << indent << "search: best_index=" << s.best_index.get_str()
       << (s.certified ? " (certified)" : " (not certified)")
       << " lower_bound=" << s.lower_bound.get_str() << " nodes=" << s.nodes_visited << "\n";
    if (s.witness)
        os << indent << "witness: " << element_str(*s.witness) << "\n";
    else
        os << indent << "witness: none\n";
    return os.str();
}

}  // namespace

std::string bound_report_text(const GonalityReport& rep) {
    std::ostringstream os;
    os << "gonality bound report\n";
    os << "group: " << group_label(rep.group) << "  (order " << rep.group.order.get_str()
       << ")\n";
    os << "field: " << field_label(rep.field) << "\n";
    os << "radius: " << rep.radius << "  budget: " << rep.budget << "\n";
    if (rep.summands.empty()) os << "no odd prime-power summands (Omega' is empty)\n";
    for (const SummandReport& r : rep.summands) {
        os << "summand s=" << r.s.get_str() << " (l=" << r.l.get_str() << ", u=" << r.u
           << ", m_s=" << r.m_s << ", n_s=" << r.n_s << ")\n";
        if (r.t) os << "  t = " << r.t->get_str() << "\n";
        os << "  norm_check: " << (r.norm_check ? "ok" : "FAILED") << "\n";
        os << "  candidate_index: " << r.candidate_index.get_str() << "\n";
        if (r.search) os << search_outcome_text(*r.search, "  ");
        os << "  principal: "
           << (r.principal == PrincipalVerdict::yes ? "yes" : "no_within_bound") << "\n";
        if (r.power_principal)
            os << "  power_principal (n_s=" << r.n_s << "): " << (*r.power_principal ? "yes" : "no")
               << "\n";
        if (r.conditional_lower)
            os << "  conditional_lower: " << r.conditional_lower->get_str() << "\n";
        if (!r.tag.empty()) os << "  tag: " << r.tag << "\n";
        if (r.budget_exhausted) os << "  budget exhausted during this summand\n";
    }
    os << "product_bound: " << rep.product_bound.get_str() << "\n";
    os << "factorial_bound: " << rep.factorial_bound.get_str() << "\n";
    os << "reported_bound: " << rep.reported_bound.get_str() << "\n";
    os << "rationality: "
       << (rep.rationality == Rationality::rational_by_criterion ? "rational_by_criterion"
                                                                 : "unknown")
       << "\n";
    os << "budget_exhausted: " << (rep.budget_exhausted ? "true" : "false") << "\n";
    if (!rep.formulas.empty()) {
        os << "formulas:\n";
        for (const FormulaEntry& f : rep.formulas)
            os << "  " << f.name << " = " << f.value << "   [" << f.caveat << "]\n";
    }
    if (!rep.notes.empty()) {
        os << "notes:\n";
        for (const std::string& n : rep.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

Json violations_json(const std::vector<HypothesisViolation>& violations) {
    Json j;
    j["schema_version"] = 1;
    j["error"] = "hypothesis_violation";
    Json list = Json::array();
    for (const auto& v : violations) {
        Json e;
        e["s"] = v.s.get_str();
        e["reason"] = v.reason;
        list.push_back(e);
    }
    j["violations"] = list;
    return j;
}

std::string violations_text(const std::vector<HypothesisViolation>& violations) {
    std::ostringstream os;
    os << "hypothesis violations:\n";
    for (const auto& v : violations)
        os << "  s = " << v.s.get_str() << ": " << v.reason << "\n";
    return os.str();
}

}  // namespace gonality
