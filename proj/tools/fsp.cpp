// fsp: command line front end. Exit 0 on success, 1 on domain errors, 2 on
// parse errors; diagnostics go to stderr as a single line.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "fsp/error.hpp"
#include "fsp/oracle.hpp"
#include "fsp/textio.hpp"

using namespace fsp;

namespace {

struct Opts {
    std::string field = "F2";
    bool field_given = false;
    std::uint64_t seed = 0;
    int functor = 0;
    std::string format = "text";
    bool two_space = false;
    bool parallel = false;
    std::size_t sweep = 0;
    std::vector<std::string> args;
};

Field cli_field(const Opts& o) { return Field::parse(o.field); }

Object load(const Opts& o, const std::string& path) {
    Object obj = read_object_file(path);
    Field f = std::visit([](auto& x) { return x.field; }, obj);
    if (o.field_given && f != cli_field(o))
        fail("FieldMismatch", path + " is over " + f.str() + " but --field is " + o.field);
    return obj;
}

const Rep& as_rep(const Object& obj, const char* cmd) {
    if (auto* v = std::get_if<Rep>(&obj)) return *v;
    fail("InvalidArgument", std::string(cmd) + " needs a representation file");
}

const RelObj& as_rel(const Object& obj, const char* cmd) {
    if (auto* r = std::get_if<RelObj>(&obj)) return *r;
    fail("InvalidArgument", std::string(cmd) + " needs a linrel file");
}

void need_args(const Opts& o, std::size_t n, const char* usage) {
    if (o.args.size() != n) fail("ParseError", std::string("usage: ") + usage);
}

int need_functor(const Opts& o) {
    if (o.functor < 1 || o.functor > 6) fail("ParseError", "--functor must be 1..6");
    return o.functor;
}

// Over Q the 0(p^s) families need candidate polynomials, which are not
// supplied here; such summands print as UNMATCHED.
std::string tag_or_unmatched(const Object& x) {
    auto t = identify(x);
    return t ? tag_str(*t) : "UNMATCHED";
}

void cmd_decompose(const Opts& o, std::ostream& out) {
    need_args(o, 1, "decompose <file>");
    Object obj = load(o, o.args[0]);
    std::vector<Object> parts = object_decompose_flat(obj, o.seed);
    // group isomorphic summands, then sort by tag text
    std::vector<std::pair<std::string, std::pair<Object, int>>> rows;
    for (auto& p : parts) {
        bool found = false;
        for (auto& r : rows)
            if (object_isomorphic(r.second.first, p, o.seed)) {
                ++r.second.second;
                found = true;
                break;
            }
        if (!found) rows.push_back({tag_or_unmatched(p), {p, 1}});
    }
    std::stable_sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.first < b.first; });
    out << "summands " << parts.size() << "\n";
    for (auto& [tag, pm] : rows)
        out << "summand " << tag << " mult " << pm.second << " dims " << dims_str(object_dims(pm.first)) << "\n";
}

void cmd_classify(const Opts& o, std::ostream& out) {
    need_args(o, 1, "classify <file>");
    for (auto& c : classify(load(o, o.args[0]), o.seed)) out << tag_str(c.tag) << " x" << c.mult << "\n";
}

void cmd_hom(const Opts& o, std::ostream& out) {
    need_args(o, 2, "hom <file> <file>");
    Object a = load(o, o.args[0]), b = load(o, o.args[1]);
    if (a.index() != b.index()) fail("InvalidArgument", "hom needs two objects of the same kind");
    if (auto* v = std::get_if<Rep>(&a)) {
        auto basis = hom_basis(*v, std::get<Rep>(b));
        out << "dim " << basis.size() << "\n";
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t x = 0; x < basis[k].comps.size(); ++x)
                out << "basis " << k << " vertex " << quiver_info(v->quiver).labels[x] << ":\n"
                    << basis[k].comps[x].str();
        return;
    }
    std::vector<RelMorphism> basis;
    if (auto* r = std::get_if<RelObj>(&a))
        basis = rel_hom_basis(*r, std::get<RelObj>(b), o.two_space ? RelKind::TwoSpace : RelKind::OneSpace);
    else
        basis = pair_hom_basis(std::get<PairRelObj>(a), std::get<PairRelObj>(b));
    out << "dim " << basis.size() << "\n";
    for (std::size_t k = 0; k < basis.size(); ++k)
        out << "basis " << k << " f1:\n" << basis[k].f1.str() << "basis " << k << " f2:\n" << basis[k].f2.str();
}

void cmd_iso(const Opts& o, std::ostream& out) {
    need_args(o, 2, "iso <file> <file>");
    Object a = load(o, o.args[0]), b = load(o, o.args[1]);
    bool iso;
    if (a.index() != b.index())
        iso = false;
    else if (auto* r = std::get_if<RelObj>(&a); r && o.two_space)
        iso = rel_is_isomorphic(*r, std::get<RelObj>(b), RelKind::TwoSpace, o.seed);
    else
        iso = object_isomorphic(a, b, o.seed);
    out << (iso ? "true" : "false") << "\n";
}

void cmd_canon(const Opts& o, std::ostream& out) {
    need_args(o, 1, "canon <tag>");
    Field f = cli_field(o);
    out << object_text(canon_rep(parse_tag(o.args[0], f), f));
}

void cmd_functor_apply(const Opts& o, std::ostream& out) {
    need_args(o, 1, "functor-apply --functor <i> <file>");
    out << object_text(apply_functor(need_functor(o), load(o, o.args[0])));
}

void cmd_check_image(const Opts& o, std::ostream& out) {
    need_args(o, 1, "check-image --functor <i> <file>");
    int i = need_functor(o);
    ImageResult r = in_image(i, as_rep(load(o, o.args[0]), "check-image"));
    if (!r.member) {
        out << "false (reason: " << r.reason << ")\n";
        return;
    }
    out << "true\n# witness in " << source_name(i) << "\n" << object_text(*r.witness);
}

void cmd_nhat(const Opts& o, std::ostream& out) {
    need_args(o, 2, "nhat <poly> <s>");
    Field f = cli_field(o);
    Poly p = Poly::parse(f, o.args[0]);
    int s = 0;
    try {
        s = std::stoi(o.args[1]);
    } catch (const std::exception&) {
        fail("ParseError", "bad multiplicity '" + o.args[1] + "'");
    }
    out << object_text(nhat(p, s));
}

void cmd_census(const Opts& o, std::ostream& out) {
    if (o.args.empty()) fail("ParseError", "usage: census <category> (<dims...> | --sweep <max>)");
    Category c = parse_category(o.args[0]);
    Field f = cli_field(o);
    CensusOptions opt;
    opt.parallel = o.parallel;
    opt.strict = false;
    std::vector<CensusReport> reports;
    if (o.sweep > 0) {
        if (o.args.size() != 1) fail("ParseError", "census --sweep takes no dimensions");
        std::vector<std::string> skipped;
        reports = census_sweep(c, f, o.sweep, opt, &skipped);
        for (auto& s : skipped) out << "# skipped " << s << "\n";
    } else {
        std::vector<std::size_t> dims;
        for (std::size_t k = 1; k < o.args.size(); ++k) {
            const std::string& w = o.args[k];
            if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos || w.size() > 3)
                fail("ParseError", "bad dimension '" + w + "'");
            dims.push_back(std::stoul(w));
        }
        reports.push_back(census(c, f, dims, opt));
    }
    std::size_t unmatched = 0;
    for (auto& r : reports) {
        out << (o.format == "lines" ? report_lines(r) : report_text(r));
        unmatched += r.unmatched_count();
    }
    if (unmatched) fail("UnmatchedClass", std::to_string(unmatched) + " unmatched indecomposable classes");
}

void cmd_rel_compose(const Opts& o, std::ostream& out) {
    need_args(o, 2, "rel-compose <sigma> <rho>");
    out << object_text(rel_compose(as_rel(load(o, o.args[0]), "rel-compose"), as_rel(load(o, o.args[1]), "rel-compose")));
}

void cmd_rel_inverse(const Opts& o, std::ostream& out) {
    need_args(o, 1, "rel-inverse <file>");
    out << object_text(rel_inverse(as_rel(load(o, o.args[0]), "rel-inverse")));
}

void cmd_rel_dual(const Opts& o, std::ostream& out) {
    need_args(o, 1, "rel-dual <file>");
    out << object_text(rel_dual(as_rel(load(o, o.args[0]), "rel-dual")));
}

// Arguments are reps in the image of F5 or linrel files (sent through F5).
void cmd_extension_test(const Opts& o, std::ostream& out) {
    need_args(o, 2, "extension-test <u> <w>");
    auto image = [&](const std::string& path) {
        Object x = load(o, path);
        return std::holds_alternative<Rep>(x) ? std::get<Rep>(x) : apply_functor(5, x);
    };
    Rep u = image(o.args[0]), w = image(o.args[1]);
    Rep v = random_extension(u, w, o.seed);
    ExtensionWitness x = extension_witness_c5(u, v, w);
    ImageResult r = in_image(5, v);
    out << object_text(v);
    out << "# eps\n" << x.eps.str() << "# zeta\n" << x.zeta.str();
    out << "in_image5 " << (r.member ? "true" : "false") << "\n";
}

using Handler = void (*)(const Opts&, std::ostream&);

int run(int argc, char** argv) {
    CLI::App app{"exact tools for four subspace representations and linear relations", "fsp"};
    app.require_subcommand(1);
    Opts o;
    const std::vector<std::pair<std::string, Handler>> cmds{
        {"decompose", cmd_decompose},     {"classify", cmd_classify},
        {"hom", cmd_hom},                 {"iso", cmd_iso},
        {"canon", cmd_canon},             {"functor-apply", cmd_functor_apply},
        {"check-image", cmd_check_image}, {"nhat", cmd_nhat},
        {"census", cmd_census},           {"rel-compose", cmd_rel_compose},
        {"rel-inverse", cmd_rel_inverse}, {"rel-dual", cmd_rel_dual},
        {"extension-test", cmd_extension_test}};
    std::vector<std::pair<CLI::App*, Handler>> subs;
    for (auto& [name, h] : cmds) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("--field", o.field, "F<p> or Q")->each([&](const std::string&) { o.field_given = true; });
        s->add_option("--seed", o.seed);
        s->add_option("--functor", o.functor)->check(CLI::Range(1, 6));
        s->add_option("--format", o.format)->check(CLI::IsMember({"text", "lines"}));
        s->add_flag("--two-space", o.two_space, "relations between two spaces");
        if (name == "census") {
            s->add_flag("--parallel", o.parallel);
            s->add_option("--sweep", o.sweep, "all dimension vectors up to this total");
        }
        s->add_option("args", o.args)->allow_extra_args();
        subs.push_back({s, h});
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
    }
    std::ostringstream out;
    try {
        for (auto& [s, h] : subs)
            if (s->parsed()) h(o, out);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == "ParseError" ? 2 : 1;
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "Internal: " << e.what() << "\n";
        return 1;
    }
}
