#include "fsp/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fsp/error.hpp"

namespace fsp {

namespace {

class Lines {
public:
    explicit Lines(std::string_view text) {
        std::size_t pos = 0, no = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            ++no;
            if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
            if (!line.empty()) lines_.push_back({std::string(line), no});
            pos = end + 1;
        }
    }

    bool done() const { return i_ == lines_.size(); }

    const std::string& next(const char* what) {
        if (done()) fail("ParseError", std::string("unexpected end of input, expected ") + what);
        return lines_[i_++].text;
    }

    // Value after "<key>:" on the next line.
    std::string keyed(const std::string& key) {
        const std::string& l = next(key.c_str());
        if (l.rfind(key + ":", 0) != 0) bad("expected '" + key + ":'");
        std::string v = l.substr(key.size() + 1);
        while (!v.empty() && v.front() == ' ') v.erase(v.begin());
        return v;
    }

    void header(const std::string& h) {
        if (next(h.c_str()) != h) bad("expected '" + h + "'");
    }

    [[noreturn]] void bad(const std::string& msg) const {
        std::size_t no = lines_.empty() ? 0 : lines_[i_ == 0 ? 0 : i_ - 1].no;
        fail("ParseError", "line " + std::to_string(no) + ": " + msg);
    }

private:
    struct Line {
        std::string text;
        std::size_t no;
    };
    std::vector<Line> lines_;
    std::size_t i_ = 0;
};

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::size_t parse_count(Lines& in, const std::string& w) {
    if (w.empty() || w.size() > 6 || w.find_first_not_of("0123456789") != std::string::npos)
        in.bad("bad dimension '" + w + "'");
    return std::stoul(w);
}

Matrix read_matrix(Lines& in, Field f) {
    const std::string& h = in.next("matrix header");
    auto x = h.find('x');
    if (x == std::string::npos) in.bad("expected '<rows>x<cols>'");
    std::size_t r = parse_count(in, h.substr(0, x)), c = parse_count(in, h.substr(x + 1));
    Matrix m(f, r, c);
    if (c == 0) return m;
    for (std::size_t i = 0; i < r; ++i) {
        auto row = words(in.next("matrix row"));
        if (row.size() != c) in.bad("expected " + std::to_string(c) + " entries");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.parse_scalar(row[j]);
    }
    return m;
}

std::pair<std::size_t, std::size_t> read_spaces(Lines& in) {
    auto w = words(in.keyed("spaces"));
    if (w.size() != 2) in.bad("expected two space dimensions");
    return {parse_count(in, w[0]), parse_count(in, w[1])};
}

std::string dims_line(const std::vector<std::size_t>& d) {
    std::string s = "dims:";
    for (auto x : d) s += " " + std::to_string(x);
    return s;
}

}  // namespace

Object parse_object(std::string_view text) {
    Lines in(text);
    Field f = Field::parse(in.keyed("field"));
    std::string kind = in.keyed("object");
    Object out;
    if (kind == "rep") {
        Quiver q = parse_quiver(in.keyed("quiver"));
        std::vector<std::size_t> dims;
        for (auto& w : words(in.keyed("dims"))) dims.push_back(parse_count(in, w));
        const QuiverInfo& info = quiver_info(q);
        if (dims.size() != info.labels.size())
            in.bad("quiver " + info.name + " needs " + std::to_string(info.labels.size()) + " dimensions");
        std::vector<Matrix> mats;
        for (auto& a : info.arrows) {
            in.header("map " + a.name + ":");
            mats.push_back(read_matrix(in, f));
        }
        out = make_rep(q, f, dims, std::move(mats));
    } else if (kind == "linrel") {
        auto [d1, d2] = read_spaces(in);
        in.header("relation R:");
        Matrix r = read_matrix(in, f);
        if (r.rows() != d1 + d2) fail("ShapeError", "relation R has " + std::to_string(r.rows()) + " rows, expected " +
                                                        std::to_string(d1 + d2));
        out = make_rel(f, d1, d2, r);
    } else if (kind == "pairrel") {
        auto [d1, d2] = read_spaces(in);
        in.header("relation R1:");
        Matrix r1 = read_matrix(in, f);
        in.header("relation R2:");
        Matrix r2 = read_matrix(in, f);
        for (auto* m : {&r1, &r2})
            if (m->rows() != d1 + d2) fail("ShapeError", "relation block has wrong row count");
        out = make_pair_rel(f, d1, d2, r1, r2);
    } else {
        in.bad("unknown object kind '" + kind + "'");
    }
    if (!in.done()) in.bad("trailing input after object");
    return out;
}

Object read_object_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IOError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_object(ss.str());
}

std::string object_text(const Object& obj) {
    std::string out;
    if (auto* v = std::get_if<Rep>(&obj)) {
        const QuiverInfo& info = quiver_info(v->quiver);
        out = "field: " + v->field.str() + "\nobject: rep\nquiver: " + info.name + "\n" + dims_line(v->dims) + "\n";
        for (std::size_t a = 0; a < info.arrows.size(); ++a) out += "map " + info.arrows[a].name + ":\n" + v->mats[a].str();
    } else if (auto* r = std::get_if<RelObj>(&obj)) {
        out = "field: " + r->field.str() + "\nobject: linrel\nspaces: " + std::to_string(r->dim1) + " " +
              std::to_string(r->dim2) + "\nrelation R:\n" + r->basis.str();
    } else {
        auto& p = std::get<PairRelObj>(obj);
        out = "field: " + p.field.str() + "\nobject: pairrel\nspaces: " + std::to_string(p.dim1) + " " +
              std::to_string(p.dim2) + "\nrelation R1:\n" + p.basis1.str() + "relation R2:\n" + p.basis2.str();
    }
    return out;
}

}  // namespace fsp
