#include "etk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "etk/directive.hpp"
#include "etk/episturmian.hpp"
#include "etk/error.hpp"
#include "etk/extremal.hpp"
#include "etk/fine.hpp"
#include "etk/lex_order.hpp"
#include "etk/skew.hpp"

namespace etk::cli {

namespace {

using json = nlohmann::ordered_json;

std::string letters_text(const AlphabetRef& alphabet, const std::vector<Letter>& letters) {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            out += ',';
        out += alphabet->symbol(letters[i]);
    }
    return out;
}

json letters_json(const AlphabetRef& alphabet, const std::vector<Letter>& letters) {
    json arr = json::array();
    for (Letter l : letters)
        arr.push_back(alphabet->symbol(l));
    return arr;
}

StructuredWord structured(const RunConfig& c, const AlphabetRef& alphabet) {
    if (c.directive)
        return DirectiveWord::parse(alphabet, *c.directive);
    if (c.skew)
        return parse_skew_spec(alphabet, *c.skew);
    const auto lit = parse_ultimately_periodic(alphabet, *c.literal);
    if (lit.period.empty())
        throw SpecError("literal word needs a non-empty period");
    return LiteralSpec{lit.prefix, lit.period};
}

json extremal_json(const ExtremalResult& r) {
    return json{{"word", r.word.to_string()},
                {"k", r.k},
                {"order", r.order.to_string()},
                {"horizon", r.horizon},
                {"exact", r.exact()}};
}

json skew_json(const SkewSpec& s) {
    const std::size_t block = skew_block(s).size();
    json j{{"directive", s.directive.to_string()},
           {"x", s.alphabet()->symbol(s.x)},
           {"p", s.p},
           {"morphism", s.mu.to_string()}};
    if (s.suffix_len == block)
        j["suffix_len"] = "full";
    else
        j["suffix_len"] = s.suffix_len;
    j["spec"] = format_skew_spec(s);
    return j;
}

json verdict_json(const FinenessVerdict& v, const AlphabetRef& alphabet) {
    json j{{"classification", to_string(v.classification)}, {"B", letters_json(alphabet, v.strict_over)}};
    if (v.skew)
        j["skew"] = skew_json(*v.skew);
    j["s_prefix"] = v.s_prefix.to_string();
    if (v.witness)
        j["witness"] = json{{"order", v.witness->order.to_string()},
                            {"k", v.witness->k},
                            {"required", v.witness->required.to_string()},
                            {"found", v.witness->found.to_string()}};
    j["depth"] = v.depth;
    j["horizon"] = v.horizon;
    return j;
}

std::string verdict_text(const FinenessVerdict& v, const AlphabetRef& alphabet) {
    std::ostringstream os;
    os << to_string(v.classification) << '\n';
    if (!v.strict_over.empty())
        os << "B: " << letters_text(alphabet, v.strict_over) << '\n';
    if (v.skew)
        os << "skew: " << format_skew_spec(*v.skew) << '\n';
    os << "s: " << v.s_prefix.to_string() << '\n';
    if (v.witness)
        os << "witness: order " << v.witness->order.to_string() << ", k = " << v.witness->k << ", required "
           << v.witness->required.to_string() << ", found " << v.witness->found.to_string() << '\n';
    return os.str();
}

void check(bool ok, const std::string& what) {
    if (!ok)
        throw ConsistencyError("self-check failed: " + what);
}

std::vector<std::string> verify_directive(const DirectiveWord& d, std::size_t horizon) {
    std::vector<std::string> done;
    const WordStream s = standard_word(d);
    const auto us = palindromic_prefixes(d, 15);
    for (std::size_t n = 0; n < us.size(); ++n) {
        check(is_palindrome(us[n]), "u_" + std::to_string(n + 1) + " is a palindrome");
        check(s.prefix(us[n].size()) == us[n], "u_" + std::to_string(n + 1) + " is a prefix of s");
    }
    done.push_back("palindromic prefixes");
    for (std::size_t n = 1; n + 1 < us.size(); ++n)
        check(h_word(d, n - 1) + us[n - 1] == us[n], "u_{n+1} = h_{n-1} u_n at n = " + std::to_string(n));
    done.push_back("h-word recurrence");
    for (std::size_t i = 1; i <= 5; ++i)
        shift_chain(d, i, std::min<std::size_t>(horizon, 500));
    done.push_back("shift chain");
    const StrictnessReport r = strictness(d);
    if (!r.strict()) {
        const Decomposition dec = decompose_nonstrict(d);
        check(dec.morphism.apply(standard_word(dec.shifted)).prefix(horizon) == s.prefix(horizon),
              "decomposition reproduces s");
        check(strictness(dec.shifted).strict(), "shifted directive is strict");
        done.push_back("decomposition");
    }
    return done;
}

std::vector<std::string> verify_skew(const SkewSpec& spec, std::size_t depth, std::size_t horizon) {
    const WordStream t = construct_skew(spec);
    const SkewSpec back = reconstruct_skew(t, depth, horizon);
    check(construct_skew(back).prefix(horizon) == t.prefix(horizon), "reconstructed spec regenerates the word");
    return {"skew round trip"};
}

std::vector<LexOrder> requested_orders(const RunConfig& c, const AlphabetRef& alphabet) {
    if (c.all_orders) {
        if (alphabet->size() > max_alphabet_orders)
            throw SpecError("--all-orders supports at most " + std::to_string(max_alphabet_orders) + " letters");
        return all_orders(alphabet);
    }
    if (c.order)
        return {LexOrder::parse(alphabet, *c.order)};
    return {LexOrder::natural(alphabet)};
}

RunResult execute(const RunConfig& c) {
    const AlphabetRef alphabet = Alphabet::parse(c.alphabet);
    RunResult res;
    std::ostringstream out;
    const bool as_json = c.output == OutputFormat::Json;

    switch (c.command) {
    case Command::Generate:
    case Command::Construct: {
        const StructuredWord spec = structured(c, alphabet);
        const WordStream t = realize(spec);
        const Word w = t.prefix(c.prefix_len);
        if (as_json) {
            json j{{"word", w.to_string()}, {"length", w.size()}, {"source", t.describe()}};
            if (const auto* sk = std::get_if<SkewSpec>(&spec))
                j["spec"] = format_skew_spec(canonical(*sk));
            out << j.dump() << '\n';
        } else {
            out << w.to_string() << '\n';
        }
        break;
    }
    case Command::Min:
    case Command::Max: {
        const WordStream t = realize(structured(c, alphabet));
        const auto orders = requested_orders(c, alphabet);
        json arr = json::array();
        for (const LexOrder& o : orders) {
            const ExtremalResult r = c.command == Command::Min ? min_factor(t, c.k, o, c.horizon)
                                                               : max_factor(t, c.k, o, c.horizon);
            if (as_json)
                arr.push_back(extremal_json(r));
            else if (orders.size() > 1)
                out << o.to_string() << '\t' << r.word.to_string() << (r.exact() ? "" : "\t(horizon-limited)")
                    << '\n';
            else
                out << r.word.to_string() << '\n';
        }
        if (as_json)
            out << (orders.size() == 1 ? arr.front() : arr).dump() << '\n';
        break;
    }
    case Command::Classify: {
        if (alphabet->size() > max_alphabet_orders)
            throw SpecError("classify supports at most " + std::to_string(max_alphabet_orders) + " letters");
        const StructuredWord spec = structured(c, alphabet);
        const FinenessVerdict v = classify(spec, c.depth, c.horizon);
        if (as_json) {
            json j = verdict_json(v, alphabet);
            if (const auto* d = std::get_if<DirectiveWord>(&spec)) {
                const StrictnessReport r = strictness(*d);
                json sr{{"alph", letters_json(alphabet, r.alph)}, {"ult", letters_json(alphabet, r.ult)}};
                sr["strict_over"] = r.strict_over ? letters_json(alphabet, *r.strict_over) : json(nullptr);
                sr["m"] = r.m;
                j["strictness"] = sr;
            }
            out << j.dump() << '\n';
        } else {
            out << verdict_text(v, alphabet);
        }
        break;
    }
    case Command::Verify: {
        const StructuredWord spec = structured(c, alphabet);
        std::vector<std::string> done;
        if (const auto* d = std::get_if<DirectiveWord>(&spec))
            done = verify_directive(*d, c.horizon);
        else if (const auto* sk = std::get_if<SkewSpec>(&spec))
            done = verify_skew(*sk, c.depth, c.horizon);
        if (alphabet->size() <= max_alphabet_orders) {
            classify(spec, c.depth, c.horizon);
            done.push_back("structural and empirical verdicts agree");
        }
        if (as_json) {
            out << json{{"ok", true}, {"checks", done}}.dump() << '\n';
        } else {
            for (const auto& name : done)
                out << name << ": ok\n";
        }
        break;
    }
    }
    res.out = out.str();
    return res;
}

} // namespace

std::size_t horizon_from_environment() {
    const char* env = std::getenv("ETK_HORIZON");
    if (!env)
        return default_horizon;
    const std::string_view text(env);
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || end != text.data() + text.size() || n == 0)
        return default_horizon;
    return n;
}

std::variant<RunConfig, RunResult> parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Episturmian and fine word toolkit"};
    app.require_subcommand(1);
    RunConfig c;
    c.horizon = horizon_from_environment();
    std::string output = "text";

    struct Sub {
        Command command;
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {Command::Generate, "generate", "print a prefix of a word"},
        {Command::Min, "min", "least factor of length k"},
        {Command::Max, "max", "greatest factor of length k"},
        {Command::Classify, "classify", "decide fineness"},
        {Command::Construct, "construct", "build a skew word from its spec"},
        {Command::Verify, "verify", "run engine self-checks on a word"},
    };
    std::vector<std::pair<CLI::App*, Command>> registered;
    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--alphabet", c.alphabet, "letters, e.g. a,b,c")->required();
        auto* dir = sub->add_option("--directive", c.directive, "directive word u(v)");
        auto* lit = sub->add_option("--literal", c.literal, "ultimately periodic word u(v)");
        auto* skew = sub->add_option("--skew", c.skew, "skew spec");
        dir->excludes(lit)->excludes(skew);
        lit->excludes(skew);
        sub->add_option("--order", c.order, "letter order, e.g. c<a<b");
        sub->add_flag("--all-orders", c.all_orders, "every order on the alphabet");
        sub->add_option("--k", c.k, "factor length")->check(CLI::PositiveNumber);
        sub->add_option("--depth", c.depth, "classification depth")->check(CLI::PositiveNumber);
        sub->add_option("--horizon", c.horizon, "prefix length scanned")->check(CLI::PositiveNumber);
        sub->add_option("--prefix", c.prefix_len, "number of letters to print")->check(CLI::NonNegativeNumber);
        sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
        registered.emplace_back(sub, s.command);
    }

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    RunResult res;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        res.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
        res.out = out.str();
        res.err = err.str();
        return res;
    }
    for (const auto& [sub, command] : registered)
        if (sub->parsed())
            c.command = command;
    c.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;

    const int sources = int(c.directive.has_value()) + int(c.literal.has_value()) + int(c.skew.has_value());
    if (sources != 1) {
        res.exit_code = 1;
        res.err = "exactly one of --directive, --literal, --skew is required\n";
        return res;
    }
    if (c.command == Command::Construct && !c.skew) {
        res.exit_code = 1;
        res.err = "construct needs --skew\n";
        return res;
    }
    if (c.order && c.all_orders) {
        res.exit_code = 1;
        res.err = "--order and --all-orders are mutually exclusive\n";
        return res;
    }
    if (c.depth > c.horizon) {
        res.exit_code = 1;
        res.err = "depth must not exceed horizon\n";
        return res;
    }
    return c;
}

RunResult run(const RunConfig& config) {
    try {
        return execute(config);
    } catch (const ConsistencyError& e) {
        return RunResult{2, "", std::string("internal consistency failure: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return RunResult{1, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return RunResult{2, "", std::string("internal failure: ") + e.what() + "\n"};
    }
}

RunResult main_entry(const std::vector<std::string>& args) {
    auto parsed = parse_args(args);
    if (auto* r = std::get_if<RunResult>(&parsed))
        return *r;
    return run(std::get<RunConfig>(parsed));
}

} // namespace etk::cli
