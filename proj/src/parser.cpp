#include <fstream>
#include <sstream>

#include "folcoh/errors.hpp"
#include "folcoh/model.hpp"

namespace folcoh {

namespace {

enum class TokKind { Name, Number, Symbol, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    char symbol = 0;
    int line = 0;
    int col = 0;
};

bool is_name_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
}
bool is_name_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

// Unicode operator aliases accepted on input: U+2212 minus, U+00B7 dot
// multiplication, U+2227 wedge.
bool match_utf8_op(const std::string& s, size_t pos, char* out, size_t* len) {
    if (pos + 2 < s.size() && (unsigned char)s[pos] == 0xE2 && (unsigned char)s[pos + 1] == 0x88 &&
        (unsigned char)s[pos + 2] == 0x92) {
        *out = '-';
        *len = 3;
        return true;
    }
    if (pos + 2 < s.size() && (unsigned char)s[pos] == 0xE2 && (unsigned char)s[pos + 1] == 0x88 &&
        (unsigned char)s[pos + 2] == 0xA7) {
        *out = '^';
        *len = 3;
        return true;
    }
    if (pos + 1 < s.size() && (unsigned char)s[pos] == 0xC2 && (unsigned char)s[pos + 1] == 0xB7) {
        *out = '*';
        *len = 2;
        return true;
    }
    return false;
}

std::vector<Token> tokenize_line(const std::string& text, int line_no) {
    std::vector<Token> out;
    size_t pos = 0;
    while (pos < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        int col = static_cast<int>(pos) + 1;
        if (c == '#') break;  // comment to end of line
        if (std::isspace(c)) {
            ++pos;
            continue;
        }
        char op;
        size_t oplen;
        if (match_utf8_op(text, pos, &op, &oplen)) {
            out.push_back({TokKind::Symbol, std::string(1, op), op, line_no, col});
            pos += oplen;
            continue;
        }
        if (std::isdigit(c)) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '/' && pos + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
            out.push_back({TokKind::Number, text.substr(start, pos - start), 0, line_no, col});
            continue;
        }
        if (is_name_start(c)) {
            size_t start = pos;
            while (pos < text.size() && is_name_char(static_cast<unsigned char>(text[pos]))) {
                // Do not swallow a UTF-8 operator that merely shares a lead byte range.
                char dummy;
                size_t dlen;
                if (match_utf8_op(text, pos, &dummy, &dlen)) break;
                ++pos;
            }
            out.push_back({TokKind::Name, text.substr(start, pos - start), 0, line_no, col});
            continue;
        }
        if (std::string("+-*^()=:,").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({TokKind::Symbol, std::string(1, static_cast<char>(c)),
                           static_cast<char>(c), line_no, col});
            ++pos;
            continue;
        }
        throw ParseError(ErrorCode::SyntaxError, line_no, col,
                         "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    out.push_back({TokKind::End, "", 0, line_no, static_cast<int>(text.size()) + 1});
    return out;
}

class LineCursor {
  public:
    explicit LineCursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_end() const { return toks_[pos_].kind == TokKind::End; }

    bool accept_symbol(char c) {
        if (toks_[pos_].kind == TokKind::Symbol && toks_[pos_].symbol == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Token expect_symbol(char c, const std::string& what) {
        const Token& t = peek();
        if (t.kind != TokKind::Symbol || t.symbol != c) {
            throw ParseError(ErrorCode::SyntaxError, t.line, t.col,
                             "expected '" + std::string(1, c) + "' " + what);
        }
        return next();
    }

    Token expect_name(const std::string& what) {
        const Token& t = peek();
        if (t.kind != TokKind::Name) {
            throw ParseError(ErrorCode::SyntaxError, t.line, t.col, "expected " + what);
        }
        return next();
    }

    void expect_end() {
        const Token& t = peek();
        if (t.kind != TokKind::End) {
            throw ParseError(ErrorCode::SyntaxError, t.line, t.col,
                             "unexpected trailing input '" + t.text + "'");
        }
    }

  private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

struct RawLine {
    std::string keyword;
    LineCursor cursor;
    int line_no;
};

class ModelBuilder {
  public:
    Model build(const std::string& text) {
        split_lines(text);
        pass_header();
        pass_generators();
        finalize_generator_set();
        pass_tables();
        return std::move(model_);
    }

  private:
    void split_lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        bool saw_end = false;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            LineCursor cursor(tokenize_line(line, line_no));
            if (cursor.at_end()) continue;
            if (saw_end) {
                const Token& t = cursor.peek();
                throw ParseError(ErrorCode::SyntaxError, t.line, t.col, "content after 'end'");
            }
            Token head = cursor.expect_name("a section keyword");
            if (head.text == "end") {
                cursor.expect_end();
                saw_end = true;
                continue;
            }
            static const char* known[] = {"model", "param", "generator", "d",
                                          "iota",  "metric", "orient",   "dbar"};
            bool ok = false;
            for (const char* k : known) ok = ok || head.text == k;
            if (!ok) {
                throw ParseError(ErrorCode::UnknownSection, head.line, head.col,
                                 "unknown section keyword '" + head.text + "'");
            }
            lines_.push_back({head.text, std::move(cursor), head.line});
        }
        if (!saw_end) {
            throw ParseError(ErrorCode::MissingEnd, line_no + 1, 1, "missing 'end' marker");
        }
    }

    void pass_header() {
        if (lines_.empty() || lines_[0].keyword != "model") {
            int line = lines_.empty() ? 1 : lines_[0].line_no;
            throw ParseError(ErrorCode::SyntaxError, line, 1, "file must start with 'model NAME'");
        }
        for (auto& raw : lines_) {
            if (raw.keyword == "model") {
                if (!model_.name.empty()) {
                    throw ParseError(ErrorCode::SyntaxError, raw.line_no, 1, "duplicate 'model' line");
                }
                // Model names may contain '-': join the remaining tokens.
                std::string name;
                while (!raw.cursor.at_end()) name += raw.cursor.next().text;
                if (name.empty()) {
                    throw ParseError(ErrorCode::SyntaxError, raw.line_no, 1, "expected a model name");
                }
                model_.name = name;
            } else if (raw.keyword == "param") {
                if (!model_.param_name.empty()) {
                    throw ParseError(ErrorCode::SyntaxError, raw.line_no, 1, "duplicate 'param' line");
                }
                Token t = raw.cursor.expect_name("a parameter name");
                if (t.text == "i") {
                    throw ParseError(ErrorCode::SyntaxError, t.line, t.col,
                                     "'i' is reserved for the imaginary unit");
                }
                model_.param_name = t.text;
                raw.cursor.expect_end();
            }
        }
    }

    void pass_generators() {
        for (auto& raw : lines_) {
            if (raw.keyword != "generator") continue;
            LineCursor& c = raw.cursor;
            Token name = c.expect_name("a generator name");
            if (name.text == "i" || name.text == model_.param_name) {
                throw ParseError(ErrorCode::SyntaxError, name.line, name.col,
                                 "generator name '" + name.text + "' is reserved");
            }
            for (const auto& g : decls_) {
                if (g.gen.name == name.text) {
                    throw ParseError(ErrorCode::DuplicateGenerator, name.line, name.col,
                                     "duplicate generator '" + name.text + "'");
                }
            }
            Generator gen;
            gen.name = name.text;
            std::string conj_name;
            c.expect_symbol(':', "after the generator name");
            bool first = true;
            while (!c.at_end()) {
                if (!first) c.expect_symbol(',', "between generator attributes");
                first = false;
                Token key = c.expect_name("an attribute (deg, type, conj)");
                c.expect_symbol('=', "after '" + key.text + "'");
                if (key.text == "deg") {
                    Token num = c.next();
                    if (num.kind != TokKind::Number || num.text.find('/') != std::string::npos) {
                        throw ParseError(ErrorCode::SyntaxError, num.line, num.col,
                                         "deg expects a positive integer");
                    }
                    gen.degree = std::stoi(num.text);
                    if (gen.degree <= 0) {
                        throw ParseError(ErrorCode::SyntaxError, num.line, num.col,
                                         "deg must be positive");
                    }
                } else if (key.text == "type") {
                    if (c.accept_symbol('(')) {
                        Token a = c.next();
                        c.expect_symbol(',', "inside the type");
                        Token b = c.next();
                        c.expect_symbol(')', "closing the type");
                        if (a.text == "1" && b.text == "0") {
                            gen.type = GenType::Holo;
                        } else if (a.text == "0" && b.text == "1") {
                            gen.type = GenType::Anti;
                        } else {
                            throw ParseError(ErrorCode::SyntaxError, a.line, a.col,
                                             "type must be (1,0), (0,1) or real");
                        }
                    } else {
                        Token word = c.expect_name("a type");
                        if (word.text != "real") {
                            throw ParseError(ErrorCode::SyntaxError, word.line, word.col,
                                             "type must be (1,0), (0,1) or real");
                        }
                        gen.type = GenType::Real;
                    }
                } else if (key.text == "conj") {
                    conj_name = c.expect_name("a generator name").text;
                } else {
                    throw ParseError(ErrorCode::SyntaxError, key.line, key.col,
                                     "unknown generator attribute '" + key.text + "'");
                }
            }
            decls_.push_back({gen, conj_name, name.line, name.col});
        }
        if (decls_.empty()) {
            throw ParseError(ErrorCode::SyntaxError, 1, 1, "model declares no generators");
        }
    }

    void finalize_generator_set() {
        std::vector<Generator> gens;
        gens.reserve(decls_.size());
        for (const auto& d : decls_) gens.push_back(d.gen);
        for (size_t k = 0; k < decls_.size(); ++k) {
            if (decls_[k].conj_name.empty()) continue;
            int partner = -1;
            for (size_t j = 0; j < gens.size(); ++j) {
                if (gens[j].name == decls_[k].conj_name) partner = static_cast<int>(j);
            }
            if (partner < 0) {
                throw ParseError(ErrorCode::UnknownGenerator, decls_[k].line, decls_[k].col,
                                 "conjugate '" + decls_[k].conj_name + "' is not a declared generator");
            }
            gens[k].conj_partner = partner;
        }
        for (size_t k = 0; k < gens.size(); ++k) {
            int p = gens[k].conj_partner;
            if (p < 0) continue;
            if (gens[static_cast<size_t>(p)].conj_partner != static_cast<int>(k)) {
                throw ParseError(ErrorCode::InvalidModel, decls_[k].line, decls_[k].col,
                                 "conjugation pairing of '" + gens[k].name + "' is not symmetric");
            }
            GenType a = gens[k].type;
            GenType b = gens[static_cast<size_t>(p)].type;
            bool consistent = (a == GenType::Holo && b == GenType::Anti) ||
                              (a == GenType::Anti && b == GenType::Holo) ||
                              (static_cast<int>(k) == p);
            if (!consistent) {
                throw ParseError(ErrorCode::InvalidModel, decls_[k].line, decls_[k].col,
                                 "conjugate generators must swap types (1,0) <-> (0,1)");
            }
        }
        model_.gens = std::make_shared<GeneratorSet>(std::move(gens));
        model_.d_images.assign(model_.gens->size(), Form(model_.gens));
        model_.iota_values.assign(model_.gens->size(), ParamPoly());
        model_.dbar_declared.assign(model_.gens->size(), std::nullopt);
        d_seen_.assign(model_.gens->size(), false);
    }

    int require_generator(const Token& t) const {
        int idx = model_.gens->index_of(t.text);
        if (idx < 0) {
            throw ParseError(ErrorCode::UnknownGenerator, t.line, t.col,
                             "unknown generator '" + t.text + "'");
        }
        return idx;
    }

    // SCALAR / POLY factor chain: rationals, i, the parameter (with optional
    // integer power), parenthesized scalar sums. Stops before a generator name.
    ParamPoly parse_coefficient(LineCursor& c, bool* saw_any) {
        ParamPoly acc(1);
        *saw_any = false;
        while (true) {
            const Token& t = c.peek();
            if (t.kind == TokKind::Number) {
                acc *= ParamPoly(GaussianRational(parse_rational_at(c.next())));
                *saw_any = true;
            } else if (t.kind == TokKind::Name && t.text == "i") {
                c.next();
                acc *= ParamPoly(GaussianRational::i());
                *saw_any = true;
            } else if (t.kind == TokKind::Name && !model_.param_name.empty() &&
                       t.text == model_.param_name) {
                c.next();
                ParamPoly s = ParamPoly::parameter();
                if (c.accept_symbol('^')) {
                    Token num = c.next();
                    if (num.kind != TokKind::Number || num.text.find('/') != std::string::npos) {
                        throw ParseError(ErrorCode::MalformedScalar, num.line, num.col,
                                         "parameter power expects an integer");
                    }
                    int e = std::stoi(num.text);
                    ParamPoly power(1);
                    for (int k = 0; k < e; ++k) power *= s;
                    s = power;
                }
                acc *= s;
                *saw_any = true;
            } else if (t.kind == TokKind::Symbol && t.symbol == '(') {
                c.next();
                acc *= parse_scalar_sum(c);
                c.expect_symbol(')', "closing a scalar group");
                *saw_any = true;
            } else if (t.kind == TokKind::Symbol && t.symbol == '*') {
                c.next();
            } else {
                break;
            }
        }
        return acc;
    }

    ParamPoly parse_scalar_sum(LineCursor& c) {
        ParamPoly total(0);
        bool first = true;
        while (true) {
            bool negate = false;
            if (c.accept_symbol('-')) {
                negate = true;
            } else if (c.accept_symbol('+')) {
                // explicit plus
            } else if (!first) {
                break;
            }
            bool saw = false;
            ParamPoly term = parse_coefficient(c, &saw);
            if (!saw) {
                const Token& t = c.peek();
                throw ParseError(ErrorCode::MalformedScalar, t.line, t.col,
                                 "expected a scalar term");
            }
            total += negate ? -term : term;
            first = false;
            const Token& t = c.peek();
            if (!(t.kind == TokKind::Symbol && (t.symbol == '+' || t.symbol == '-'))) break;
        }
        return total;
    }

    Rational parse_rational_at(const Token& t) {
        try {
            return parse_rational(t.text);
        } catch (const Error& e) {
            throw ParseError(ErrorCode::MalformedScalar, t.line, t.col, e.what());
        }
    }

    std::pair<Monomial, int> parse_monomial(LineCursor& c) {
        std::vector<int> indices;
        Token first = c.expect_name("a generator name");
        indices.push_back(require_generator(first));
        while (c.accept_symbol('^')) {
            Token t = c.expect_name("a generator name after '^'");
            indices.push_back(require_generator(t));
        }
        auto [mono, sign] = koszul_sort(std::move(indices), *model_.gens);
        if (sign == 0) {
            throw ParseError(ErrorCode::SyntaxError, first.line, first.col,
                             "monomial repeats a generator");
        }
        return {mono, sign};
    }

    Form parse_form_sum(LineCursor& c) {
        Form out(model_.gens);
        bool first = true;
        while (!c.at_end()) {
            bool negate = false;
            if (c.accept_symbol('-')) {
                negate = true;
            } else if (c.accept_symbol('+')) {
                // explicit plus
            } else if (!first) {
                const Token& t = c.peek();
                throw ParseError(ErrorCode::SyntaxError, t.line, t.col,
                                 "expected '+' or '-' between terms");
            }
            bool saw_coeff = false;
            ParamPoly coeff = parse_coefficient(c, &saw_coeff);
            if (negate) coeff = -coeff;
            const Token& t = c.peek();
            if (t.kind == TokKind::Name) {
                auto [mono, sign] = parse_monomial(c);
                if (sign < 0) coeff = -coeff;
                out.add_term(mono, coeff);
            } else if (saw_coeff) {
                out.add_term(Monomial(), coeff);
            } else {
                throw ParseError(ErrorCode::SyntaxError, t.line, t.col, "expected a term");
            }
            first = false;
        }
        return out;
    }

    void pass_tables() {
        for (auto& raw : lines_) {
            LineCursor& c = raw.cursor;
            if (raw.keyword == "d" || raw.keyword == "dbar") {
                Token name = c.expect_name("a generator name");
                int idx = require_generator(name);
                c.expect_symbol('=', "in a differential line");
                Form image = parse_form_sum(c);
                c.expect_end();
                if (raw.keyword == "d") {
                    if (d_seen_[static_cast<size_t>(idx)]) {
                        throw ParseError(ErrorCode::SyntaxError, name.line, name.col,
                                         "duplicate d-line for '" + name.text + "'");
                    }
                    d_seen_[static_cast<size_t>(idx)] = true;
                    int want = model_.gens->at(idx).degree + 1;
                    for (const auto& [m, cf] : image.terms()) {
                        if (m.degree(*model_.gens) != want) {
                            throw ParseError(
                                ErrorCode::DegreeMismatch, name.line, name.col,
                                "d of '" + name.text + "' must be homogeneous of degree " +
                                    std::to_string(want));
                        }
                    }
                    model_.d_images[static_cast<size_t>(idx)] = std::move(image);
                } else {
                    model_.dbar_declared[static_cast<size_t>(idx)] = std::move(image);
                }
            } else if (raw.keyword == "iota") {
                Token name = c.expect_name("a generator name");
                int idx = require_generator(name);
                c.expect_symbol('=', "in an iota line");
                ParamPoly value = parse_scalar_sum(c);
                c.expect_end();
                model_.iota_values[static_cast<size_t>(idx)] = std::move(value);
                model_.has_iota = true;
            } else if (raw.keyword == "metric") {
                Token word = c.expect_name("'orthonormal'");
                if (word.text != "orthonormal") {
                    throw ParseError(ErrorCode::SyntaxError, word.line, word.col,
                                     "only 'metric orthonormal' is supported");
                }
                c.expect_end();
                model_.metric_orthonormal = true;
            } else if (raw.keyword == "orient") {
                auto [mono, sign] = parse_monomial(c);
                c.expect_end();
                if (mono.length() != model_.gens->size()) {
                    throw ParseError(ErrorCode::InvalidModel, raw.line_no, 1,
                                     "orientation must name every generator exactly once");
                }
                model_.orientation = mono;
                model_.orientation_sign = sign;
            }
        }
    }

    struct Decl {
        Generator gen;
        std::string conj_name;
        int line;
        int col;
    };

    Model model_;
    std::vector<RawLine> lines_;
    std::vector<Decl> decls_;
    std::vector<bool> d_seen_;
};

}  // namespace

Model parse_model(const std::string& text) {
    ModelBuilder builder;
    return builder.build(text);
}

Model parse_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::string serialize_model(const Model& m) {
    std::ostringstream out;
    out << "model " << m.name << "\n";
    if (m.has_param()) out << "param " << m.param_name << "\n";
    for (const auto& g : m.gens->all()) {
        out << "generator " << g.name << " : deg=" << g.degree;
        switch (g.type) {
            case GenType::Holo: out << ", type=(1,0)"; break;
            case GenType::Anti: out << ", type=(0,1)"; break;
            case GenType::Real: out << ", type=real"; break;
            case GenType::Untyped: break;
        }
        if (g.conj_partner >= 0) out << ", conj=" << m.gens->at(g.conj_partner).name;
        out << "\n";
    }
    for (size_t k = 0; k < m.gens->size(); ++k) {
        out << "d " << m.gens->at(static_cast<int>(k)).name << " = "
            << format_form(m.d_images[k], m.param_name.empty() ? "s" : m.param_name) << "\n";
    }
    if (m.has_iota) {
        for (size_t k = 0; k < m.gens->size(); ++k) {
            if (m.iota_values[k].is_zero()) continue;
            out << "iota " << m.gens->at(static_cast<int>(k)).name << " = "
                << format_poly(m.iota_values[k], m.param_name.empty() ? "s" : m.param_name) << "\n";
        }
    }
    if (m.metric_orthonormal) out << "metric orthonormal\n";
    if (m.orientation.has_value()) {
        // A negative declared sign is re-emitted by swapping the first two
        // names of the canonical word.
        std::vector<int> word = m.orientation->indices();
        if (m.orientation_sign < 0 && word.size() >= 2) std::swap(word[0], word[1]);
        out << "orient ";
        for (size_t k = 0; k < word.size(); ++k) {
            if (k > 0) out << "^";
            out << m.gens->at(word[k]).name;
        }
        out << "\n";
    }
    for (size_t k = 0; k < m.gens->size(); ++k) {
        if (!m.dbar_declared[k].has_value()) continue;
        out << "dbar " << m.gens->at(static_cast<int>(k)).name << " = "
            << format_form(*m.dbar_declared[k], m.param_name.empty() ? "s" : m.param_name) << "\n";
    }
    out << "end\n";
    return out.str();
}

}  // namespace folcoh
