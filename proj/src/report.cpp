#include "biquad/report.hpp"

#include <sstream>

namespace biquad {

Report make_report_header(const AlgebraPresentation& pres) {
    Report r;
    r.name = pres.name;
    r.n = pres.n;
    r.orientation = to_string(pres.orientation);
    return r;
}

namespace {

OrderedJson conditions_to_json(const ConditionReport& cr) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& e : cr.entries) {
        OrderedJson c;
        c["id"] = e.id;
        c["indices"] = e.indices;
        c["lhs"] = e.lhs.str();
        c["holds"] = e.holds;
        arr.push_back(std::move(c));
    }
    return arr;
}

OrderedJson witness_to_json(const TwistFamily& tw) {
    OrderedJson rho = OrderedJson::array();
    for (int k = 1; k <= tw.n(); ++k) {
        OrderedJson images = OrderedJson::array();
        for (int j = 1; j <= tw.n(); ++j) {
            OrderedJson img;
            img["lambda"] = tw.rho[k - 1].images[j - 1].first.str();
            img["mu"] = tw.rho[k - 1].images[j - 1].second.str();
            images.push_back(std::move(img));
        }
        rho.push_back(std::move(images));
    }
    OrderedJson w;
    w["rho"] = std::move(rho);
    return w;
}

}  // namespace

OrderedJson report_to_json(const Report& r) {
    OrderedJson j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["orientation"] = r.orientation;
    if (r.pbw) {
        OrderedJson p;
        p["consistent"] = r.pbw->consistent;
        OrderedJson fails = OrderedJson::array();
        for (const auto& [triple, diff] : r.pbw->failures) {
            OrderedJson f;
            f["triple"] = triple;
            f["difference"] = to_string(diff, r.n);
            fails.push_back(std::move(f));
        }
        p["failures"] = std::move(fails);
        if (r.pbw3) p["closed_conditions"] = [&] {
            OrderedJson arr = OrderedJson::array();
            for (const auto& e : r.pbw3->entries) {
                OrderedJson c;
                c["id"] = e.id;
                c["lhs"] = e.lhs.str();
                c["holds"] = e.holds;
                arr.push_back(std::move(c));
            }
            return arr;
        }();
        j["pbw"] = std::move(p);
    }
    if (r.verdict) {
        const auto& v = *r.verdict;
        OrderedJson vj;
        vj["status"] = to_string(v.status);
        vj["gkdim"] = v.gkdim;
        if (v.obstruction)
            vj["obstruction"] = {v.obstruction->i, v.obstruction->j, v.obstruction->k};
        if (v.witness) vj["witness"] = witness_to_json(*v.witness);
        if (v.verification) {
            const auto& w = *v.verification;
            OrderedJson f;
            f["endomorphisms"] = w.all_relations_preserved();
            f["commutation"] = w.commuting;
            f["dd_zero"] = w.dd_zero;
            f["leibniz"] = w.leibniz;
            f["connectedness"] = w.connected;
            f["integral_identity"] = w.integral_identity;
            vj["verification"] = std::move(f);
        }
        j["verdict"] = std::move(vj);
        j["conditions"] = conditions_to_json(v.conditions);
        OrderedJson checks;
        int depth = r.depth.value_or(v.verification ? v.verification->depth : 0);
        checks["dd_zero_depth"] = depth;
        checks["leibniz_depth"] = std::max(1, depth / 2);
        checks["connectedness_depth"] = depth;
        checks["integral_identity"] =
            v.verification ? v.verification->integral_identity : false;
        j["checks"] = std::move(checks);
    }
    OrderedJson t;
    t["total_ms"] = r.total_ms;
    j["timings"] = std::move(t);
    return j;
}

std::string twist_table_text(const TwistFamily& tw) {
    std::ostringstream os;
    for (int k = 1; k <= tw.n(); ++k) {
        os << "  rho_" << k << ":";
        for (int j = 1; j <= tw.n(); ++j) {
            os << (j > 1 ? ", " : " ");
            os << "x" << j << " -> ";
            os << to_string(tw.rho[k - 1].image_of(j), tw.n());
        }
        os << "\n";
    }
    return os.str();
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "algebra: " << (r.name.empty() ? "(unnamed)" : r.name) << " (n=" << r.n << ", "
       << r.orientation << ")\n";
    if (r.pbw) {
        os << "pbw: " << (r.pbw->consistent ? "consistent" : "inconsistent") << "\n";
        for (const auto& [triple, diff] : r.pbw->failures)
            os << "  overlap (" << triple[0] << "," << triple[1] << "," << triple[2]
               << ") difference: " << to_string(diff, r.n) << "\n";
        if (r.pbw3) {
            os << "closed conditions (n=3):\n";
            for (const auto& e : r.pbw3->entries)
                os << "  [" << (e.holds ? "ok" : "fail") << "] " << e.id << " = " << e.lhs.str()
                   << "\n";
        }
    }
    if (r.verdict) {
        const auto& v = *r.verdict;
        os << "verdict: " << to_string(v.status) << " (gk dimension " << v.gkdim << ")\n";
        if (v.obstruction)
            os << "obstruction: a(" << v.obstruction->i << "," << v.obstruction->j << ","
               << v.obstruction->k << ") != 0\n";
        if (v.witness) {
            os << "witness:\n" << twist_table_text(*v.witness);
        }
        if (v.verification) {
            const auto& w = *v.verification;
            os << "checks (depth " << w.depth << "):\n";
            os << "  [" << (w.all_relations_preserved() ? "ok" : "fail")
               << "] twists extend to endomorphisms\n";
            os << "  [" << (w.commuting ? "ok" : "fail") << "] twists commute\n";
            os << "  [" << (w.dd_zero ? "ok" : "fail") << "] d(d(a)) = 0\n";
            os << "  [" << (w.leibniz ? "ok" : "fail") << "] product rule\n";
            os << "  [" << (w.connected ? "ok" : "fail") << "] kernel of d is the scalars\n";
            os << "  [" << (w.integral_identity ? "ok" : "fail") << "] integral-form identities\n";
        }
        if (v.status != SmoothStatus::smooth) {
            auto failed = v.conditions.failed();
            if (!failed.empty()) {
                os << "failed conditions:\n";
                for (const auto* e : failed) {
                    os << "  [fail] " << e->id;
                    os << " (";
                    bool sep = false;
                    for (int idx : e->indices) {
                        if (idx == 0) continue;
                        if (sep) os << ",";
                        os << idx;
                        sep = true;
                    }
                    os << ") = " << e->lhs.str() << "\n";
                }
            }
        }
    }
    return os.str();
}

}  // namespace biquad
