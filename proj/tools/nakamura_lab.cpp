// nakamura-lab: command-line front end to the library.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 bad input (unreadable or malformed files, invalid parameters).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lab_io.hpp"

using namespace nakamura;
using io::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Output
{
    std::string out;
    std::string md;
};

void emit(const json& j, const Output& o)
{
    const std::string text = j.dump(2) + "\n";
    if (o.out.empty())
        std::cout << text;
    else
        io::write_text_file(o.out, text);
}

Game load_game(const std::string& path)
{
    if (path.empty()) throw io::InputError("--game is required");
    return io::game_from_json(io::read_json_file(path));
}

void warn_if_empty_wins(const FiniteGame& g)
{
    if (g.empty_is_winning())
        std::cerr << "warning: the empty coalition is winning; axiom bounds do not apply and nu = 1\n";
}

std::vector<MembershipStream> default_streams(std::size_t depth)
{
    auto s = eventually_periodic_streams(4, 4);
    const auto p = padded_streams(std::min<std::size_t>(depth, 10));
    s.insert(s.end(), p.begin(), p.end());
    return s;
}

int cmd_classify(const std::string& game, std::size_t depth, const Output& o)
{
    const Game g = load_game(game);
    if (const auto* f = std::get_if<FiniteGame>(&g)) {
        warn_if_empty_wins(*f);
        emit(io::classification_to_json(classify(*f)), o);
        return 0;
    }
    const auto& pg = std::get<PrefixGame>(g);
    const std::size_t d = std::min(depth, pg.max_depth());
    emit(io::evidence_to_json(classify_bounded(pg, default_streams(d), d, 4)), o);
    return 0;
}

int cmd_nakamura(const std::string& game, std::size_t depth, const Output& o)
{
    const Game g = load_game(game);
    if (const auto* f = std::get_if<FiniteGame>(&g)) {
        warn_if_empty_wins(*f);
        json j = io::nakamura_to_json(nakamura_number(*f));
        if (!f->empty_is_winning()) j["axiom_interval"] = lemma_constraints(classify(*f).signature, true).to_string();
        emit(j, o);
        return 0;
    }
    const auto& pg = std::get<PrefixGame>(g);
    const std::size_t d = std::min(depth, pg.max_depth());
    const auto w = nakamura_witness_bounded(pg, d, 6);
    json j = {{"bounded", true}, {"depth", d}};
    if (w) {
        j["nu_upper_bound"] = w->strings.size();
        j["witness"] = io::coalitions_to_json(w->coalitions);
        j["witness_strings"] = io::strings_to_json(w->strings);
    } else {
        j["nu_upper_bound"] = nullptr;
        j["witness"] = json::array();
    }
    emit(j, o);
    return 0;
}

int cmd_core_check(const std::string& game, std::size_t m, const std::string& mode, std::uint64_t seed,
                   std::size_t count, const std::string& profile, const Output& o)
{
    const Game g = load_game(game);
    const auto* f = std::get_if<FiniteGame>(&g);
    if (!f) throw io::InputError("core-check needs a finite game");
    if (m == 0) throw io::InputError("--alternatives must be positive");
    if (!profile.empty()) {
        const Profile p = io::profile_from_json(io::read_json_file(profile), m);
        const auto c = core(*f, AlternativeSet::indexed(m), p);
        emit({{"core", c}, {"dominance", io::relation_to_json(dominance(*f, AlternativeSet::indexed(m), p))}}, o);
        return 0;
    }
    CoreCheckMode cm;
    if (mode == "exhaustive")
        cm = CoreCheckMode::exhaustive();
    else if (mode == "sampled")
        cm = CoreCheckMode::sampled(seed, count);
    else
        throw io::InputError("--mode must be exhaustive or sampled");
    const auto v = verify_core_theorem(*f, m, cm);
    emit(io::core_verdict_to_json(v), o);
    return v.holds ? 0 : kExitFail;
}

int cmd_build(const std::string& name, const BuildParams& bp, const Output& o)
{
    const Game g = build(name, bp);
    if (const auto* f = std::get_if<FiniteGame>(&g))
        emit(io::game_to_json(*f), o);
    else
        emit({{"kind", "construction"}, {"name", name}, {"params", io::params_to_json(bp)}}, o);
    return 0;
}

int cmd_product(const std::string& left, const std::string& right, const std::string& pairing, std::size_t shift,
                const Output& o)
{
    const json lj = io::read_json_file(left);
    const json rj = io::read_json_file(right);
    const json pj = pairing == "shift" ? json{{"kind", "shift"}, {"k", shift}} : json{{"kind", pairing}};
    const json spec = {{"kind", "product"}, {"left", lj}, {"right", rj}, {"pairing", pj}};
    const Game g = io::game_from_json(spec);
    if (const auto* f = std::get_if<FiniteGame>(&g))
        emit(io::game_to_json(*f), o);
    else
        emit(spec, o);
    return 0;
}

int cmd_effectivity(const std::string& form, const std::string& notion, const Output& o)
{
    if (form.empty()) throw io::InputError("--form is required");
    const GameForm gf = io::form_from_json(io::read_json_file(form));
    if (notion == "alpha")
        emit(io::game_to_json(derive_alpha_game(gf)), o);
    else if (notion == "exact")
        emit(io::game_to_json(derive_exact_game(gf)), o);
    else
        throw io::InputError("--notion must be alpha or exact");
    return 0;
}

/// Builds the tables, cross-checks them against the decision procedure
/// and checks pairwise incompatibility of the determining strings.
int cmd_appendix(const std::string& oracle_kind, std::uint64_t seed, std::size_t max_len, const std::string& dump,
                 const Output& o)
{
    const IndexOracle oracle = make_oracle(oracle_kind, seed, std::max<std::size_t>(max_len + 2, 16));
    const AppendixATables t = appendixA_tables(oracle, max_len);
    std::size_t mismatches = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
            const BitString a = BitString::from_mask(m, len);
            const Determination d = appendixA_classify(oracle, a).determination;
            const Determination want = t.in_T1(a)   ? Determination::WinningDetermining
                                       : t.in_T0(a) ? Determination::LosingDetermining
                                                    : Determination::Nondetermining;
            if (d != want) ++mismatches;
        }
    }
    std::vector<BitString> all = t.T0;
    all.insert(all.end(), t.T1.begin(), t.T1.end());
    std::size_t compatible_pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!incompatible(all[i], all[j])) ++compatible_pairs;
    const auto w = nakamura_witness_bounded(appendixA_game(oracle, max_len), max_len, 3);

    const bool ok = mismatches == 0 && compatible_pairs == 0 && w && !t.truncated;
    json j = {{"oracle", oracle.name()},
              {"max_len", max_len},
              {"l", t.l},
              {"T0_count", t.T0.size()},
              {"T1_count", t.T1.size()},
              {"decision_mismatches", mismatches},
              {"compatible_pairs", compatible_pairs},
              {"nonweak_witness", w ? io::strings_to_json(w->strings) : json(nullptr)},
              {"truncated", t.truncated},
              {"passed", ok}};
    if (!dump.empty()) io::write_text_file(dump, io::tables_to_json(t).dump(2) + "\n");
    emit(j, o);
    return ok ? 0 : kExitFail;
}

int cmd_table(std::size_t max_k, std::size_t depth, const Output& o)
{
    const TableReport r = run_table_report(max_k, depth);
    if (!o.md.empty()) io::write_text_file(o.md, to_markdown(r));
    if (!o.out.empty() || o.md.empty()) emit(io::report_to_json(r), o);
    return r.passed() ? 0 : kExitFail;
}

std::vector<std::size_t> parse_list(const std::string& s)
{
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoul(part));
        } catch (const std::exception&) {
            throw io::InputError("bad list entry '" + part + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simple games, Nakamura numbers and the constructions around them"};
    app.require_subcommand(1);

    Output o;
    std::string game, mode = "exhaustive", name, sizes, members, oracle = "alternating", form, notion = "alpha";
    std::string left, right, pairing = "even_odd", dump, profile;
    std::uint64_t seed = 0;
    std::size_t depth = 16, max_k = 6, alternatives = 2, count = 1000, max_len = 12, shift = 0;
    std::optional<std::size_t> n, player, k;
    std::size_t max_depth = 64;
    bool allow_strong = false;

    auto add_out = [&](CLI::App* c) { c->add_option("-o,--out", o.out, "write JSON here instead of stdout"); };

    auto* c_classify = app.add_subcommand("classify", "axiom profile and type of a game");
    c_classify->add_option("--game", game, "game JSON")->required();
    c_classify->add_option("--depth", depth, "evaluation depth for prefix games");
    add_out(c_classify);

    auto* c_nakamura = app.add_subcommand("nakamura", "Nakamura number with a witness");
    c_nakamura->add_option("--game", game, "game JSON")->required();
    c_nakamura->add_option("--depth", depth, "search depth for prefix games");
    add_out(c_nakamura);

    auto* c_core = app.add_subcommand("core-check", "check core nonemptiness against #X < nu");
    c_core->add_option("--game", game, "finite game JSON")->required();
    c_core->add_option("--alternatives", alternatives, "number of alternatives m");
    c_core->add_option("--mode", mode, "exhaustive | sampled");
    c_core->add_option("--seed", seed, "sampling seed");
    c_core->add_option("--count", count, "profiles to sample");
    c_core->add_option("--profile", profile, "compute the core of this profile instead");
    add_out(c_core);

    auto* c_build = app.add_subcommand("build", "build a catalog game");
    c_build->add_option("--name", name, "construction name")->required();
    c_build->add_option("--n", n, "number of players");
    c_build->add_option("--player", player, "dictator");
    c_build->add_option("--k", k, "k for veto_free_rule");
    c_build->add_option("--sizes", sizes, "block sizes, comma separated");
    c_build->add_option("--members", members, "unanimity members, comma separated");
    c_build->add_option("--oracle", oracle, "appendixA oracle: alternating | seeded");
    c_build->add_option("--seed", seed, "oracle seed");
    c_build->add_option("--max-depth", max_depth, "appendixA evaluation bound");
    c_build->add_flag("--allow-strong", allow_strong, "accept partition_type3 with three singleton blocks");
    add_out(c_build);

    auto* c_product = app.add_subcommand("product", "product of two games");
    c_product->add_option("--left", left, "finite game JSON")->required();
    c_product->add_option("--right", right, "game JSON")->required();
    c_product->add_option("--pairing", pairing, "even_odd | shift");
    c_product->add_option("--shift", shift, "offset for the shift pairing");
    add_out(c_product);

    auto* c_eff = app.add_subcommand("effectivity", "simple game derived from a game form");
    c_eff->add_option("--form", form, "game form JSON")->required();
    c_eff->add_option("--notion", notion, "alpha | exact");
    add_out(c_eff);

    auto* c_app = app.add_subcommand("appendixA", "tables and checks for the infinite type 1 game");
    c_app->add_option("--oracle", oracle, "alternating | seeded");
    c_app->add_option("--seed", seed, "oracle seed");
    c_app->add_option("--max-len", max_len, "longest string considered");
    c_app->add_option("--dump-tables", dump, "write l, F, T0, T1 as JSON");
    add_out(c_app);

    auto* c_table = app.add_subcommand("table", "reproduce the type / Nakamura number table");
    c_table->add_option("--max-k", max_k, "largest k for the partition families");
    c_table->add_option("--depth", depth, "evaluation depth for infinite witnesses");
    c_table->add_option("--seed", seed, "unused; the report is deterministic");
    c_table->add_option("--md", o.md, "write a Markdown rendering here");
    add_out(c_table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*c_classify) return cmd_classify(game, depth, o);
        if (*c_nakamura) return cmd_nakamura(game, depth, o);
        if (*c_core) return cmd_core_check(game, alternatives, mode, seed, count, profile, o);
        if (*c_build) {
            BuildParams bp;
            bp.n = n;
            bp.player = player;
            bp.k = k;
            if (!sizes.empty()) bp.sizes = parse_list(sizes);
            if (!members.empty()) bp.members = parse_list(members);
            bp.oracle = oracle;
            bp.seed = seed;
            bp.max_depth = max_depth;
            bp.require_nonstrong = !allow_strong;
            return cmd_build(name, bp, o);
        }
        if (*c_product) return cmd_product(left, right, pairing, shift, o);
        if (*c_eff) return cmd_effectivity(form, notion, o);
        if (*c_app) return cmd_appendix(oracle, seed, max_len, dump, o);
        if (*c_table) return cmd_table(max_k, depth, o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
