#include "qsb/diagram.hpp"

#include <cctype>
#include <map>

namespace qsb {

namespace {

struct GenInfo {
    Word dom, cod;
    std::string expansion;  // empty for primitives
};

const std::map<std::string, GenInfo>& gen_table() {
    static const std::map<std::string, GenInfo> t = {
        {"capS", {"SS", "", ""}},
        {"cupS", {"", "SS", ""}},
        {"capV", {"VV", "", ""}},
        {"cupV", {"", "VV", ""}},
        {"xSS", {"SS", "SS", ""}},
        {"xSSi", {"SS", "SS", ""}},
        {"xVV", {"VV", "VV", ""}},
        {"xVVi", {"VV", "VV", ""}},
        {"xSV", {"SV", "VS", ""}},
        {"xSVi", {"SV", "VS", ""}},
        {"xVS", {"VS", "SV", ""}},
        {"xVSi", {"VS", "SV", ""}},
        {"mergeVS", {"VS", "S", ""}},
        // clockwise rotations of mergeVS
        {"splitVS", {"S", "VS", "cupV*id(S) ; id(V)*mergeVS"}},
        {"mergeSSV", {"SS", "V", "splitVS*id(S) ; id(V)*capS"}},
        {"splitSV", {"S", "SV", "cupS*id(S) ; id(S)*mergeSSV"}},
        {"mergeSV", {"SV", "S", "splitSV*id(V) ; id(S)*capV"}},
        {"splitVSS", {"V", "SS", "cupS*id(V) ; id(S)*mergeSV"}},
    };
    return t;
}

const GenInfo& info(const std::string& name) {
    auto it = gen_table().find(name);
    if (it == gen_table().end()) throw ParseError("unknown generator '" + name + "'");
    return it->second;
}

Diagram make(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

bool is_generator(const std::string& name) { return gen_table().count(name) > 0; }
bool is_primitive(const std::string& name) { return is_generator(name) && info(name).expansion.empty(); }
Word gen_dom(const std::string& name) { return info(name).dom; }
Word gen_cod(const std::string& name) { return info(name).cod; }
std::string derived_expansion(const std::string& name) { return info(name).expansion; }

Word power(char c, int k) { return Word(std::size_t(std::max(k, 0)), c); }

Diagram gen(const std::string& name) {
    const GenInfo& g = info(name);
    Node n;
    n.kind = NodeKind::Gen;
    n.gen = name;
    n.dom = g.dom;
    n.cod = g.cod;
    n.key = name;
    return make(std::move(n));
}

Diagram id(const Word& w) {
    for (char c : w)
        if (c != 'S' && c != 'V') throw ParseError(std::string("bad object letter '") + c + "'");
    Node n;
    n.kind = NodeKind::Id;
    n.word = n.dom = n.cod = w;
    n.key = "id(" + w + ")";
    return make(std::move(n));
}

Diagram comp(const Diagram& top, const Diagram& bot) {
    if (bot->cod != top->dom)
        throw TypeError("cannot compose: codomain \"" + bot->cod + "\" of " + bot->key + " vs domain \"" + top->dom +
                        "\" of " + top->key);
    Node n;
    n.kind = NodeKind::Comp;
    n.top = top;
    n.bot = bot;
    n.dom = bot->dom;
    n.cod = top->cod;
    n.key = "(" + bot->key + " ; " + top->key + ")";
    return make(std::move(n));
}

Diagram tens(const Diagram& left, const Diagram& right) {
    Node n;
    n.kind = NodeKind::Tens;
    n.top = left;
    n.bot = right;
    n.dom = left->dom + right->dom;
    n.cod = left->cod + right->cod;
    n.key = "(" + left->key + " * " + right->key + ")";
    return make(std::move(n));
}

Diagram asym(int r, bool flipped, bool barred) {
    if (r < 0) throw DomainError("antisymmetrizer needs r >= 0");
    Node n;
    n.kind = NodeKind::Asym;
    n.r = r;
    n.flipped = flipped;
    n.barred = barred;
    n.dom = n.cod = power('V', r);
    n.key = "asym(" + std::to_string(r) + ")" + (flipped ? "'" : "") + (barred ? "~" : "");
    return make(std::move(n));
}

Diagram seq(const std::vector<Diagram>& layers) {
    if (layers.empty()) throw DomainError("empty composite");
    Diagram d = layers[0];
    for (std::size_t i = 1; i < layers.size(); ++i) d = comp(layers[i], d);
    return d;
}

Diagram tens_all(const std::vector<Diagram>& factors) {
    if (factors.empty()) return id("");
    Diagram d = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) d = tens(d, factors[i]);
    return d;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Diagram run() {
        Diagram d = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return d;
    }

private:
    const std::string& s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("syntax error at position " + std::to_string(p_) + ": " + msg);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    Diagram expr() {
        Diagram d = term();
        while (eat(';')) {
            std::size_t at = p_;
            Diagram t = term();
            try {
                d = comp(t, d);
            } catch (const TypeError& e) {
                throw TypeError(std::string(e.what()) + " (at position " + std::to_string(at) + ")");
            }
        }
        return d;
    }

    Diagram term() {
        Diagram d = factor();
        while (eat('*')) d = tens(d, factor());
        return d;
    }

    Diagram factor() {
        skip();
        if (eat('(')) {
            Diagram d = expr();
            expect(')');
            return d;
        }
        std::size_t start = p_;
        while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
        std::string name = s_.substr(start, p_ - start);
        if (name.empty()) fail(p_ < s_.size() ? "unexpected '" + std::string(1, s_[p_]) + "'" : "unexpected end");
        if (name == "id") {
            expect('(');
            skip();
            std::size_t w0 = p_;
            while (p_ < s_.size() && (s_[p_] == 'S' || s_[p_] == 'V' || s_[p_] == ' ')) ++p_;
            Word w;
            for (std::size_t k = w0; k < p_; ++k)
                if (s_[k] != ' ') w += s_[k];
            expect(')');
            return id(w);
        }
        if (name == "asym") {
            expect('(');
            skip();
            std::size_t n0 = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (n0 == p_) fail("expected a natural number");
            int r = std::stoi(s_.substr(n0, p_ - n0));
            expect(')');
            return asym(r);
        }
        if (!is_generator(name)) {
            p_ = start;
            fail("unknown generator '" + name + "'");
        }
        return gen(name);
    }
};

}  // namespace

Diagram parse(const std::string& text) { return Parser(text).run(); }

std::string to_string(const Diagram& d) {
    switch (d->kind) {
        case NodeKind::Gen: return d->gen;
        case NodeKind::Id: return "id(" + d->word + ")";
        case NodeKind::Asym: return "asym(" + std::to_string(d->r) + ")";
        case NodeKind::Comp: return "(" + to_string(d->bot) + " ; " + to_string(d->top) + ")";
        case NodeKind::Tens: return "(" + to_string(d->top) + " * " + to_string(d->bot) + ")";
    }
    return "";
}

Diagram flip_v(const Diagram& d) {
    static const std::map<std::string, std::string> table = {
        {"capS", "cupS"}, {"cupS", "capS"}, {"capV", "cupV"}, {"cupV", "capV"},
        {"xSS", "xSS"},   {"xSSi", "xSSi"}, {"xVV", "xVV"},   {"xVVi", "xVVi"},
        {"xSV", "xVS"},   {"xVS", "xSV"},   {"xSVi", "xVSi"}, {"xVSi", "xSVi"},
        {"mergeVS", "splitVS"},
    };
    switch (d->kind) {
        case NodeKind::Gen: {
            auto it = table.find(d->gen);
            if (it != table.end()) return gen(it->second);
            return flip_v(parse(derived_expansion(d->gen)));
        }
        case NodeKind::Id: return d;
        case NodeKind::Asym: return asym(d->r, !d->flipped, d->barred);
        case NodeKind::Comp: return comp(flip_v(d->bot), flip_v(d->top));
        case NodeKind::Tens: return tens(flip_v(d->top), flip_v(d->bot));
    }
    return d;
}

Diagram bar(const Diagram& d) {
    static const std::map<std::string, std::string> table = {
        {"xSS", "xSSi"}, {"xSSi", "xSS"}, {"xVV", "xVVi"}, {"xVVi", "xVV"},
        {"xSV", "xSVi"}, {"xSVi", "xSV"}, {"xVS", "xVSi"}, {"xVSi", "xVS"},
    };
    switch (d->kind) {
        case NodeKind::Gen: {
            auto it = table.find(d->gen);
            return it != table.end() ? gen(it->second) : d;
        }
        case NodeKind::Id: return d;
        case NodeKind::Asym: return asym(d->r, d->flipped, !d->barred);
        case NodeKind::Comp: return comp(bar(d->top), bar(d->bot));
        case NodeKind::Tens: return tens(bar(d->top), bar(d->bot));
    }
    return d;
}

const std::vector<Rotation>& rotations() {
    static const std::vector<Rotation> r = {
        {"mergeVS", "mergeVS", "id(V)*splitVS ; capV*id(S)"},
        {"splitVS", "cupV*id(S) ; id(V)*mergeVS", "id(S)*cupS ; mergeSSV*id(S)"},
        {"mergeSSV", "splitVS*id(S) ; id(V)*capS", "id(S)*splitSV ; capS*id(V)"},
        {"splitSV", "cupS*id(S) ; id(S)*mergeSSV", "id(S)*cupV ; mergeSV*id(V)"},
        {"mergeSV", "splitSV*id(V) ; id(S)*capV", "id(S)*splitVSS ; capS*id(S)"},
        {"splitVSS", "cupS*id(V) ; id(S)*mergeSV", "id(V)*cupS ; mergeVS*id(S)"},
    };
    return r;
}

}  // namespace qsb
