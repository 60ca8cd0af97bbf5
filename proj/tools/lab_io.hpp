// lab_io.hpp -- JSON encodings used by nakamura-lab

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nakamura.hpp"

namespace nakamura::io {

using json = nlohmann::json;

/// Malformed input (bad JSON, wrong schema, unreadable file).
class InputError : public Error
{
public:
    using Error::Error;
};

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

inline json coalition_to_json(const Coalition& c) { return c.members(); }

inline json coalitions_to_json(const std::vector<Coalition>& cs)
{
    json out = json::array();
    for (const auto& c : cs) out.push_back(coalition_to_json(c));
    return out;
}

inline json game_to_json(const FiniteGame& g)
{
    json win = json::array();
    for (const auto& c : g.winning()) win.push_back(coalition_to_json(c));
    return {{"kind", "finite"}, {"universe", g.universe()}, {"winning", win}};
}

namespace detail {

template <typename T>
T get_field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
    }
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& out)
{
    if (j.contains(key)) out = get_field<T>(j, key);
}

inline BuildParams params_from_json(const json& p)
{
    BuildParams bp;
    if (p.is_null()) return bp;
    if (!p.is_object()) throw InputError("construction params must be an object");
    get_optional(p, "n", bp.n);
    get_optional(p, "player", bp.player);
    get_optional(p, "k", bp.k);
    if (p.contains("sizes")) bp.sizes = get_field<std::vector<std::size_t>>(p, "sizes");
    if (p.contains("members")) bp.members = get_field<std::vector<std::size_t>>(p, "members");
    if (p.contains("oracle")) bp.oracle = get_field<std::string>(p, "oracle");
    if (p.contains("seed")) bp.seed = get_field<std::uint64_t>(p, "seed");
    if (p.contains("max_depth")) bp.max_depth = get_field<std::size_t>(p, "max_depth");
    if (p.contains("require_nonstrong")) bp.require_nonstrong = get_field<bool>(p, "require_nonstrong");
    return bp;
}

} // namespace detail

inline json params_to_json(const BuildParams& bp)
{
    json p = json::object();
    if (bp.n) p["n"] = *bp.n;
    if (bp.player) p["player"] = *bp.player;
    if (bp.k) p["k"] = *bp.k;
    if (!bp.sizes.empty()) p["sizes"] = bp.sizes;
    if (!bp.members.empty()) p["members"] = bp.members;
    p["oracle"] = bp.oracle;
    p["seed"] = bp.seed;
    p["max_depth"] = bp.max_depth;
    if (!bp.require_nonstrong) p["require_nonstrong"] = false;
    return p;
}

inline Pairing pairing_from_json(const json& j)
{
    const auto kind = detail::get_field<std::string>(j, "kind");
    if (kind == "even_odd") return Pairing::even_odd();
    if (kind == "shift") return Pairing::shift(detail::get_field<std::size_t>(j, "k"));
    throw InputError("unknown pairing '" + kind + "' (expected even_odd or shift)");
}

inline Game game_from_json(const json& j)
{
    const auto kind = detail::get_field<std::string>(j, "kind");
    if (kind == "finite") {
        const auto n = detail::get_field<std::size_t>(j, "universe");
        const auto family = detail::get_field<std::vector<std::vector<std::size_t>>>(j, "winning");
        return FiniteGame::from_coalitions(n, family);
    }
    if (kind == "construction") {
        const auto name = detail::get_field<std::string>(j, "name");
        return build(name, detail::params_from_json(j.contains("params") ? j.at("params") : json()));
    }
    if (kind == "product") {
        const Game left = game_from_json(detail::get_field<json>(j, "left"));
        const Game right = game_from_json(detail::get_field<json>(j, "right"));
        const Pairing pr = pairing_from_json(detail::get_field<json>(j, "pairing"));
        const auto* l = std::get_if<FiniteGame>(&left);
        if (!l) throw InputError("the left factor of a product must be finite");
        if (const auto* r = std::get_if<FiniteGame>(&right)) return product(*l, *r, pr);
        return product(*l, std::get<PrefixGame>(right), pr);
    }
    throw InputError("unknown game kind '" + kind + "' (expected finite, construction or product)");
}

// ---------------------------------------------------------------------------
// Game forms
// ---------------------------------------------------------------------------

/// {"players":k,"strategies":[c_0,...],"outcomes":[labels],"table":{"s_0,...,s_{k-1}":outcome}}
/// where an outcome is a label or an index. The table may also be an
/// array in mixed radix order (player 0 fastest).
inline GameForm form_from_json(const json& j)
{
    const auto k = detail::get_field<std::size_t>(j, "players");
    const auto counts = detail::get_field<std::vector<std::size_t>>(j, "strategies");
    if (counts.size() != k) throw InputError("'strategies' must list one count per player");
    const json& outs = detail::get_field<json>(j, "outcomes");
    std::vector<std::string> labels;
    if (outs.is_number_unsigned()) {
        for (std::size_t i = 0; i < outs.get<std::size_t>(); ++i) labels.push_back(std::to_string(i));
    } else if (outs.is_array()) {
        for (const auto& o : outs) labels.push_back(o.is_string() ? o.get<std::string>() : o.dump());
    } else {
        throw InputError("'outcomes' must be a list of labels or a count");
    }

    auto outcome_index = [&](const json& v) -> std::size_t {
        if (v.is_number_unsigned()) return v.get<std::size_t>();
        const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return i;
        throw InputError("table names unknown outcome " + v.dump());
    };

    std::size_t total = 1;
    for (std::size_t c : counts) {
        total *= std::max<std::size_t>(c, 1);
        if (total > kMaxStrategyProfiles) throw BoundError("strategy profile space exceeds 2^20");
    }
    const json& tab = detail::get_field<json>(j, "table");
    std::vector<std::size_t> table(total, labels.size());
    if (tab.is_array()) {
        if (tab.size() != total) throw InputError("table array must have one entry per strategy profile");
        for (std::size_t i = 0; i < total; ++i) table[i] = outcome_index(tab[i]);
    } else if (tab.is_object()) {
        for (const auto& [key, val] : tab.items()) {
            std::vector<std::size_t> sigma;
            std::stringstream ss(key);
            std::string part;
            while (std::getline(ss, part, ',')) {
                try {
                    sigma.push_back(std::stoul(part));
                } catch (const std::exception&) {
                    throw InputError("bad strategy profile key '" + key + "'");
                }
            }
            if (sigma.size() != k) throw InputError("profile key '" + key + "' must name one strategy per player");
            std::size_t idx = 0, radix = 1;
            for (std::size_t i = 0; i < k; ++i) {
                if (sigma[i] >= counts[i]) throw InputError("profile key '" + key + "' is out of range");
                idx += sigma[i] * radix;
                radix *= counts[i];
            }
            table[idx] = outcome_index(val);
        }
        for (std::size_t o : table)
            if (o == labels.size()) throw InputError("table must cover every strategy profile");
    } else {
        throw InputError("'table' must be an object or an array");
    }
    return GameForm(counts, labels.size(), std::move(table));
}

inline json form_to_json(const GameForm& gf)
{
    json outs = json::array();
    for (std::size_t i = 0; i < gf.outcomes(); ++i) outs.push_back(std::to_string(i));
    json table = json::object();
    const auto& counts = gf.strategy_counts();
    for (std::size_t idx = 0; idx < gf.profiles(); ++idx) {
        std::string key;
        std::size_t rest = idx;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            key += (i ? "," : "") + std::to_string(rest % counts[i]);
            rest /= counts[i];
        }
        table[key] = std::to_string(gf.outcome(idx));
    }
    return {{"players", gf.players()}, {"strategies", counts}, {"outcomes", outs}, {"table", table}};
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

inline json classification_to_json(const Classification& c)
{
    json w = json::object();
    const auto& wit = c.witness;
    if (wit.nonmonotonic)
        w["nonmonotonic"] = {{"winning", coalition_to_json(wit.nonmonotonic->first)},
                             {"losing_superset", coalition_to_json(wit.nonmonotonic->second)}};
    if (wit.nonproper) w["nonproper"] = coalition_to_json(*wit.nonproper);
    if (wit.nonstrong) w["nonstrong"] = coalition_to_json(*wit.nonstrong);
    if (wit.nonweak) w["nonweak"] = coalitions_to_json(*wit.nonweak);
    if (wit.veto) w["veto"] = coalition_to_json(*wit.veto);
    return {{"type", c.signature.type_index()}, {"signature", c.signature.signs()}, {"witnesses", w}};
}

inline json strings_to_json(const std::vector<BitString>& v)
{
    json out = json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

inline json evidence_to_json(const BoundedEvidence& ev)
{
    json w = json::object();
    if (ev.nonmonotonic)
        w["nonmonotonic"] = {{"winning", ev.nonmonotonic->first.to_string()},
                             {"losing_superset", ev.nonmonotonic->second.to_string()}};
    if (ev.nonproper) w["nonproper"] = ev.nonproper->to_string();
    if (ev.nonstrong) w["nonstrong"] = ev.nonstrong->to_string();
    if (ev.nonweak) w["nonweak"] = strings_to_json(ev.nonweak->strings);
    if (ev.veto_positions) w["veto_positions"] = Coalition(*ev.veto_positions, 64).members();
    return {{"type", ev.signature.type_index()},
            {"signature", ev.signature.signs()},
            {"bounded", true},
            {"depth", ev.depth},
            {"streams", ev.streams},
            {"determined", ev.determined},
            {"noncarrier_lengths", ev.noncarrier_lengths},
            {"witnesses", w}};
}

inline json nakamura_to_json(const NakamuraResult& r)
{
    json nu = r.infinite() ? json("infinity") : json(r.value);
    return {{"nu", nu}, {"witness", coalitions_to_json(r.witness)}};
}

inline json relation_to_json(const StrictRelation& r) { return r.pairs(); }

inline json profile_to_json(const Profile& p)
{
    json out = json::array();
    for (std::size_t i = 0; i < p.players(); ++i) out.push_back(relation_to_json(p[i]));
    return out;
}

inline Profile profile_from_json(const json& j, std::size_t m)
{
    if (!j.is_array()) throw InputError("a profile is an array of pair lists");
    std::vector<StrictRelation> rels;
    for (const auto& rel : j) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        try {
            pairs = rel.get<std::vector<std::pair<std::size_t, std::size_t>>>();
        } catch (const json::exception& e) {
            throw InputError(std::string("profile relation: ") + e.what());
        }
        rels.push_back(StrictRelation::from_pairs(m, pairs));
    }
    return Profile(std::move(rels));
}

inline json core_verdict_to_json(const CoreTheoremVerdict& v)
{
    json out = {{"nu", v.nu == kInfinity ? json("infinity") : json(v.nu)},
                {"alternatives", v.alternatives},
                {"expect_nonempty_core", v.expect_nonempty_core},
                {"holds", v.holds},
                {"profiles_checked", v.profiles_checked},
                {"method", v.method}};
    if (v.empty_core_profile) out["empty_core_profile"] = profile_to_json(*v.empty_core_profile);
    return out;
}

inline json tables_to_json(const AppendixATables& t)
{
    json f = json::array();
    for (const auto& fs : t.F) f.push_back(strings_to_json(fs));
    return {{"max_len", t.max_len}, {"l", t.l},           {"F", f},
            {"T0", strings_to_json(t.T0)}, {"T1", strings_to_json(t.T1)}, {"truncated", t.truncated}};
}

inline json report_to_json(const TableReport& r)
{
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"type", e.type},
                           {"finite", e.finite},
                           {"game", e.game},
                           {"observed_type", e.observed_type ? json(*e.observed_type) : json(nullptr)},
                           {"nu", e.nu},
                           {"expected", e.expected},
                           {"method", e.method},
                           {"status", to_string(e.status)},
                           {"note", e.note}});
    }
    json census = json::object();
    for (const auto& [type, count] : r.census) census[std::to_string(type)] = count;
    return {{"max_k", r.max_k}, {"depth", r.depth}, {"entries", entries}, {"census", census}, {"passed", r.passed()}};
}

} // namespace nakamura::io
