#include "enriques/config/curve_config.hpp"

#include "enriques/errors.hpp"

namespace enriques::config {

CurveConfig::CurveConfig(std::vector<std::string> names, IntMatrix gram, std::vector<std::string> tags)
    : names_(std::move(names)), gram_(std::move(gram)), tags_(std::move(tags)) {
    const std::size_t n = names_.size();
    if (gram_.size() != n) throw InvalidParameter("Gram matrix size does not match the curve count");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw InvalidParameter("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) {
                throw InvalidParameter("Gram matrix is not symmetric at " + names_[i] + ", " + names_[j]);
            }
        }
    }
    if (tags_.empty()) tags_.assign(n, "");
    if (tags_.size() != n) throw InvalidParameter("tag count does not match the curve count");
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second) throw InvalidParameter("duplicate curve name " + names_[i]);
    }
}

std::size_t CurveConfig::index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw UnknownCurveName("no curve named '" + name + "'");
    return it->second;
}

CurveConfig CurveConfig::restricted(const std::vector<std::string>& names) const {
    std::vector<std::size_t> idx;
    for (const auto& n : names) idx.push_back(index_of(n));
    IntMatrix g(idx.size(), std::vector<long>(idx.size()));
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        tags.push_back(tags_[idx[i]]);
        for (std::size_t j = 0; j < idx.size(); ++j) g[i][j] = gram_[idx[i]][idx[j]];
    }
    return CurveConfig(names, std::move(g), std::move(tags));
}

// ---------------------------------------------------------------- Y

namespace {

// Which fiber component each section meets, per place (rows of the
// incidence table; columns s0..s4, m0..m4).
const char* const kAtOne[10] = {"F1", "E1_8", "E1_6", "E1_4", "E1_2", "E1_5", "E1_3", "E1_1", "E1_9", "E1_7"};
const char* const kAtInf[10] = {"Finf", "Einf_6", "Einf_2", "Einf_8", "Einf_4",
                                "Einf_5", "Einf_1", "Einf_7", "Einf_3", "Einf_9"};

std::vector<std::string> decagon(const std::string& f, const std::string& e) {
    std::vector<std::string> out{f};
    for (int i = 1; i <= 9; ++i) out.push_back(e + "_" + std::to_string(i));
    return out;
}

}  // namespace

DivisorCombination fiber_class(const std::string& place) {
    DivisorCombination d;
    if (place == "1" || place == "inf") {
        for (const auto& n : place == "1" ? decagon("F1", "E1") : decagon("Finf", "Einf")) d[n] = 1;
    } else if (place == "w") {
        d = {{"Fw", 1}, {"Ew", 1}};
    } else if (place == "w2") {
        d = {{"Fw2", 1}, {"Ew2", 1}};
    } else {
        throw InvalidParameter("no singular fiber at t = " + place);
    }
    return d;
}

CurveConfig build_Y_config() {
    std::vector<std::string> names, tags;
    auto add = [&](const std::vector<std::string>& ns, const std::string& tag) {
        for (const auto& n : ns) {
            names.push_back(n);
            tags.push_back(tag);
        }
    };
    const auto d1 = decagon("F1", "E1");
    const auto dinf = decagon("Finf", "Einf");
    add(d1, "fiber t=1");
    add(dinf, "fiber t=inf");
    add({"Fw", "Ew"}, "fiber t=w");
    add({"Fw2", "Ew2"}, "fiber t=w2");
    std::vector<std::string> sections;
    for (const char* kind : {"s", "m"}) {
        for (int i = 0; i <= 4; ++i) sections.push_back(kind + std::to_string(i));
    }
    add(sections, "section");

    const std::size_t n = names.size();
    IntMatrix g(n, std::vector<long>(n, 0));
    std::map<std::string, std::size_t> at;
    for (std::size_t i = 0; i < n; ++i) at[names[i]] = i;
    auto set = [&](const std::string& a, const std::string& b, long v) {
        g[at.at(a)][at.at(b)] = v;
        g[at.at(b)][at.at(a)] = v;
    };
    for (std::size_t i = 0; i < n; ++i) g[i][i] = -2;
    for (const auto* cyc : {&d1, &dinf}) {
        for (std::size_t i = 0; i < cyc->size(); ++i) set((*cyc)[i], (*cyc)[(i + 1) % cyc->size()], 1);
    }
    set("Fw", "Ew", 2);
    set("Fw2", "Ew2", 2);
    for (int i = 0; i <= 4; ++i) set("s" + std::to_string(i), "m" + std::to_string(i), 1);
    for (int c = 0; c < 10; ++c) {
        const std::string& sec = sections[c];
        set(sec, kAtOne[c], 1);
        set(sec, kAtInf[c], 1);
        set(sec, c < 5 ? "Fw" : "Ew", 1);
        set(sec, c < 5 ? "Fw2" : "Ew2", 1);
    }
    return CurveConfig(std::move(names), std::move(g), std::move(tags));
}

long divisor_pairing(const CurveConfig& cfg, const DivisorCombination& d1, const DivisorCombination& d2) {
    long total = 0;
    for (const auto& [a, ca] : d1) {
        const std::size_t i = cfg.index_of(a);
        for (const auto& [b, cb] : d2) total += ca * cb * cfg.gram()[i][cfg.index_of(b)];
    }
    return total;
}

std::vector<std::string> integral_set_D() {
    std::vector<std::string> out;
    for (const auto& [name, c] : derivations::divisorial_part_D()) out.push_back(name);
    return out;
}

CurveConfig quotient_images(const CurveConfig& cfg, const std::vector<std::string>& integral_set) {
    std::vector<std::size_t> integral;
    std::vector<bool> is_integral(cfg.size(), false);
    for (const auto& name : integral_set) {
        const std::size_t i = cfg.index_of(name);
        if (is_integral[i]) throw IntegralSetInvalid("curve " + name + " listed twice");
        is_integral[i] = true;
        integral.push_back(i);
    }
    const IntMatrix& g = cfg.gram();
    for (std::size_t a = 0; a < integral.size(); ++a) {
        const std::size_t i = integral[a];
        // An integral (-2)-curve maps to a (-1)-curve; disjointness lets all
        // of them be contracted independently.
        if (g[i][i] != -2) {
            throw IntegralSetInvalid(cfg.names()[i] + " is not a (-2)-curve, its image is not a (-1)-curve");
        }
        for (std::size_t b = a + 1; b < integral.size(); ++b) {
            if (g[i][integral[b]] != 0) {
                throw IntegralSetInvalid(cfg.names()[i] + " and " + cfg.names()[integral[b]] +
                                         " meet; their images cannot be contracted to points");
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (!is_integral[i]) keep.push_back(i);
    }
    // Non-integral C: pi^*C' = 2C, so <C', D'> = 2<C, D> and <C', e'> = <C, e>
    // for e integral (pi^*e' = e). Contracting the disjoint (-1)-curves e'
    // adds sum_e <C', e'><D', e'>.
    IntMatrix out(keep.size(), std::vector<long>(keep.size()));
    std::vector<std::string> names, tags;
    for (std::size_t a = 0; a < keep.size(); ++a) {
        names.push_back(cfg.names()[keep[a]] + "'");
        tags.push_back(cfg.tags()[keep[a]]);
        for (std::size_t b = 0; b < keep.size(); ++b) {
            long v = 2 * g[keep[a]][keep[b]];
            for (std::size_t e : integral) v += g[keep[a]][e] * g[keep[b]][e];
            out[a][b] = v;
        }
    }
    return CurveConfig(std::move(names), std::move(out), std::move(tags));
}

CurveConfig quotient_blowdown_gram(const CurveConfig& cfg, const std::vector<std::string>& integral_set) {
    const CurveConfig all = quotient_images(cfg, integral_set);
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all.gram()[i][i] == -2) keep.push_back(all.names()[i]);
    }
    return all.restricted(keep);
}

CurveConfig build_e10_config() {
    std::vector<std::string> names;
    for (int i = 1; i <= 10; ++i) names.push_back("E" + std::to_string(i));
    IntMatrix g(10, std::vector<long>(10, 0));
    for (int i = 0; i < 10; ++i) g[i][i] = -2;
    for (int i = 0; i + 1 < 9; ++i) g[i][i + 1] = g[i + 1][i] = 1;
    g[2][9] = g[9][2] = 1;
    return CurveConfig(std::move(names), std::move(g));
}

CurveConfig builtin_config(const std::string& name) {
    if (name == "Y34") return build_Y_config();
    if (name == "X20") return quotient_blowdown_gram(build_Y_config(), integral_set_D());
    if (name == "E10") return build_e10_config();
    throw UnknownBuiltin("unknown configuration '" + name + "'");
}

}  // namespace enriques::config
