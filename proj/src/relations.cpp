#include "qsb/relations.hpp"

#include <algorithm>

namespace qsb {

Lin lin(const Diagram& d, const Scalar& c) { return Lin{Term{c, d}}; }

Lin operator+(Lin a, const Lin& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Lin operator*(const Scalar& c, Lin a) {
    for (auto& t : a) t.c = c * t.c;
    return a;
}

namespace {

Diagram D(const std::string& s) { return parse(s); }
Diagram idv(int k) { return id(power('V', k)); }
Diagram cap(char a) { return gen(std::string("cap") + a); }
Diagram cup(char a) { return gen(std::string("cup") + a); }
Diagram x(char a, char b) { return gen(std::string("x") + a + b); }
Diagram xi(char a, char b) { return gen(std::string("x") + a + b + "i"); }
Diagram idc(char a) { return id(Word(1, a)); }
Lin neg(const Lin& l) { return Scalar(-1) * l; }

constexpr char kColors[2] = {'S', 'V'};

class Builder {
public:
    Builder(std::string suite, std::vector<RelationPair>& out) : suite_(std::move(suite)), out_(out) {}

    void add(const std::string& name, const Lin& lhs, const Lin& rhs, std::optional<int> r = std::nullopt,
             const std::string& cond = "") {
        const Lin& ref = lhs.empty() ? rhs : lhs;
        if (ref.empty()) throw DomainError("relation " + name + " has no terms");
        RelationPair p{suite_, name, lhs, rhs, ref[0].d->dom, ref[0].d->cod, r, cond};
        for (const Lin* side : {&lhs, &rhs})
            for (const auto& t : *side)
                if (t.d->dom != p.dom || t.d->cod != p.cod)
                    throw TypeError("relation " + name + ": term " + to_string(t.d) + " has type \"" + t.d->dom +
                                    "\" -> \"" + t.d->cod + "\", expected \"" + p.dom + "\" -> \"" + p.cod + "\"");
        out_.push_back(std::move(p));
    }

private:
    std::string suite_;
    std::vector<RelationPair>& out_;
};

Diagram curl_pos(char w) {
    return seq({tens(cup(w), idc(w)), tens(idc(w), x(w, w)), tens(cap(w), idc(w))});
}

Diagram curl_neg(char w) {
    return seq({tens(idc(w), cup(w)), tens(xi(w, w), idc(w)), tens(idc(w), cap(w))});
}

void defining(int N, std::vector<RelationPair>& out) {
    Builder b("defining", out);
    Params p = qparams(N);
    Scalar q = Scalar::q_pow(1), k2 = p.kappa * p.kappa;
    for (char A : kColors)
        for (char B : kColors) {
            std::string ab = std::string(1, A) + B;
            b.add("braid R2 x" + ab + ";x" + std::string(1, B) + A + "i", lin(comp(xi(B, A), x(A, B))), lin(id(ab)));
            b.add("braid R2 x" + ab + "i;x" + std::string(1, B) + A, lin(comp(x(B, A), xi(A, B))), lin(id(ab)));
        }
    for (char a : kColors)
        for (char bb : kColors)
            for (char c : kColors) {
                Diagram lhs = seq({tens(x(a, bb), idc(c)), tens(idc(bb), x(a, c)), tens(x(bb, c), idc(a))});
                Diagram rhs = seq({tens(idc(a), x(bb, c)), tens(x(a, c), idc(bb)), tens(idc(c), x(a, bb))});
                b.add(std::string("braid R3 ") + a + bb + c, lin(lhs), lin(rhs));
            }
    for (char a : kColors)
        for (char c : kColors) {
            std::string col = std::string("cap") + a + " strand " + c;
            b.add("braid cap-slide negative " + col, lin(seq({tens(xi(a, c), idc(a)), tens(idc(c), cap(a))})),
                  lin(seq({tens(idc(a), x(c, a)), tens(cap(a), idc(c))})));
            b.add("braid cap-slide positive " + col, lin(seq({tens(x(a, c), idc(a)), tens(idc(c), cap(a))})),
                  lin(seq({tens(idc(a), xi(c, a)), tens(cap(a), idc(c))})));
        }
    for (char a : kColors) {
        b.add(std::string("yank left ") + a, lin(seq({tens(cup(a), idc(a)), tens(idc(a), cap(a))})), lin(idc(a)));
        b.add(std::string("yank right ") + a, lin(seq({tens(idc(a), cup(a)), tens(cap(a), idc(a))})), lin(idc(a)));
    }
    b.add("skein", lin(D("xVV")) + neg(lin(D("xVVi"))),
          (q - q.inv()) * (lin(id("VV")) + neg(lin(D("capV ; cupV")))));
    b.add("deloop S", lin(D("xSS ; capS")), lin(D("capS"), p.t));
    b.add("deloop V", lin(D("xVV ; capV")), lin(D("capV"), k2));
    for (char a : kColors) {
        b.add(std::string("typhoon ") + a,
              lin(seq({tens(D("mergeVS"), idc(a)), x('S', a)})),
              lin(seq({tens(idc('V'), x('S', a)), tens(x('V', a), idc('S')), tens(idc(a), D("mergeVS"))})));
        b.add(std::string("typhoon inverse ") + a,
              lin(seq({tens(D("mergeVS"), idc(a)), xi('S', a)})),
              lin(seq({tens(idc('V'), xi('S', a)), tens(xi('V', a), idc('S')), tens(idc(a), D("mergeVS"))})));
    }
    b.add("swishy",
          lin(D("id(S)*cupV ; id(S)*id(V)*cupS*id(V) ; id(S)*mergeVS*id(S)*id(V) ; capS*id(S)*id(V)")),
          lin(D("cupS*id(S) ; id(S)*cupV*id(SS) ; id(SV)*mergeVS*id(S) ; id(SV)*capS")));
    b.add("fishy", lin(D("xSV ; mergeVS")), lin(D("id(SV)*cupS ; id(S)*mergeVS*id(S) ; capS*id(S)"), p.kappa));
    b.add("oist", lin(D("id(V)*mergeVS ; mergeVS")) + lin(D("xVV*id(S) ; id(V)*mergeVS ; mergeVS"), q),
          lin(D("capV*id(S)"), q * k2 + Scalar(1)));
    b.add("dimrel S", lin(D("cupS ; capS")), lin(id(""), p.dS));
    b.add("dimrel V", lin(D("cupV ; capV")), lin(id(""), p.dV));
}

void derived(int N, std::vector<RelationPair>& out) {
    Builder b("derived", out);
    Params p = qparams(N);
    Scalar q = Scalar::q_pow(1), qi = q.inv(), k = p.kappa, k2 = k * k, one(1);
    b.add("reloop S", lin(D("xSSi ; capS")), lin(D("capS"), p.t.inv()));
    b.add("reloop V", lin(D("xVVi ; capV")), lin(D("capV"), k2.inv()));
    b.add("reloop cup S", lin(D("cupS ; xSS")), lin(D("cupS"), p.t));
    b.add("reloop cup V", lin(D("cupV ; xVV")), lin(D("cupV"), k2));
    for (const auto& r : rotations())
        b.add("vortex2 " + r.name, lin(D(r.counterclockwise)), lin(D(r.clockwise)));
    b.add("lobster1 xSV", lin(D("xSV ; mergeVS")), lin(D("mergeSV"), k));
    b.add("lobster1 xVSi", lin(D("xVSi ; mergeSV")), lin(D("mergeVS"), k.inv()));
    b.add("lobster1 xVS", lin(D("xVS ; mergeSV")), lin(D("mergeVS"), k));
    b.add("lobster1 xSVi", lin(D("xSVi ; mergeVS")), lin(D("mergeSV"), k.inv()));
    b.add("lobster2 xSS", lin(D("xSS ; mergeSSV")), lin(D("mergeSSV"), p.t * k.inv()));
    b.add("lobster2 xSSi", lin(D("xSSi ; mergeSSV")), lin(D("mergeSSV"), p.t.inv() * k));
    const std::string inv_cond = "q kappa^2 + 1 invertible";
    b.add("bump", lin(D("splitVS ; mergeVS")), lin(id("S"), p.dV), std::nullopt, inv_cond);
    Scalar qk1 = q * k2 + one, c = k / qk1;
    b.add("zombie xSV", lin(D("xSV")),
          c * (lin(D("mergeSV ; splitVS")) + lin(D("splitVS*id(V) ; id(V)*mergeSV"), q)), std::nullopt, inv_cond);
    b.add("zombie xVS", lin(D("xVS")),
          c * (lin(D("mergeVS ; splitSV")) + lin(D("id(V)*splitSV ; mergeVS*id(V)"), q)), std::nullopt, inv_cond);
    b.add("ash", lin(D("xSV")) + neg(lin(D("xSVi"))),
          (k * (q - one) / qk1) * (lin(D("splitVS*id(V) ; id(V)*mergeSV")) + neg(lin(D("mergeSV ; splitVS")))),
          std::nullopt, inv_cond);
    b.add("ledge", lin(id("VS"), qk1),
          lin(D("mergeVS ; splitVS")) + lin(D("id(V)*splitVS ; xVVi*id(S) ; id(V)*mergeVS"), q));
    b.add("oister", lin(D("id(V)*mergeVS ; mergeVS")) + lin(D("xVVi*id(S) ; id(V)*mergeVS ; mergeVS"), qi),
          lin(D("capV*id(S)"), qi * k2.inv() + one));
    {
        Diagram sym_id = id("VVS"), sym_x = D("xVV*id(S)");
        Diagram t1 = D("id(V)*mergeVS ; mergeVS"), t2 = D("capV*id(S)");
        Lin l = lin(comp(t1, sym_id)) + neg(lin(comp(t2, sym_id))) + lin(comp(t1, sym_x), q) +
                lin(comp(t2, sym_x), -q);
        b.add("symmetrizer factorization", l, {});
    }
    Diagram B = barbell();
    b.add("barbell split-split", lin(D("splitSV*splitVS ; id(S)*capV*id(S)")), lin(B));
    b.add("barbell split-merge", lin(D("id(S)*splitVS ; mergeSV*id(S)")), lin(B));
    b.add("barbell merge-split", lin(D("splitSV*id(S) ; id(S)*mergeVS")), lin(B));
    {
        Diagram B12 = tens(B, id("S")), B23 = tens(id("S"), B);
        b.add("grapes",
              lin(seq({B23, B12, B12})) + lin(seq({B12, B23, B12}), q + qi) + lin(seq({B12, B12, B23})),
              lin(B23, qk1 * (qi * k2.inv() + one)));
    }
    struct Canal {
        const char* f;
        char X, Y, Z;
    };
    for (Canal cn : {Canal{"mergeVS", 'V', 'S', 'S'}, Canal{"mergeSV", 'S', 'V', 'S'}, Canal{"mergeSSV", 'S', 'S', 'V'}}) {
        Diagram f = gen(cn.f);
        b.add(std::string("canal ") + cn.f, lin(seq({x(cn.X, cn.Y), x(cn.Y, cn.X), f})),
              lin(seq({tens(curl_neg(cn.X), curl_neg(cn.Y)), f, curl_pos(cn.Z)})));
    }
}

Diagram nest_cup_v(int r) {
    if (r == 0) return id("");
    return comp(tens_all({idv(1), nest_cup_v(r - 1), idv(1)}), D("cupV"));
}

Diagram nest_cap_v(int r) {
    if (r == 0) return id("");
    return comp(D("capV"), tens_all({idv(1), nest_cap_v(r - 1), idv(1)}));
}

Scalar monkey_value(int N, int r) {
    Params p = qparams(N);
    Scalar q = Scalar::q_pow(1), k2 = p.kappa * p.kappa, k2i = k2.inv();
    Scalar v = (k2 * Scalar::q_pow(r) + Scalar::q_pow(1 - r)) / (k2 + q);
    for (int s = 1; s <= r; ++s)
        v *= (k2i * Scalar::q_pow(2 - s) - k2 * Scalar::q_pow(s - 2)) / (Scalar::q_pow(s) - Scalar::q_pow(-s));
    return v;
}

void asym_suite(int N, int rmax, std::vector<RelationPair>& out) {
    Builder b("asym", out);
    Params p = qparams(N);
    Scalar q = Scalar::q_pow(1), qi = q.inv(), k2 = p.kappa * p.kappa, k2i = k2.inv(), one(1);
    Scalar qq = q - qi;
    for (int r = 1; r <= rmax; ++r) {
        Diagram A = asym(r);
        for (int s = 0; s + 2 <= r; ++s) {
            Diagram cr = tens_all({idv(s), D("xVV"), idv(r - s - 2)});
            Diagram cn = tens_all({idv(s), D("xVVi"), idv(r - s - 2)});
            std::string at = " at " + std::to_string(s);
            b.add("absorbcr above" + at, lin(comp(cr, A)), lin(A, -qi), r);
            b.add("absorbcr below" + at, lin(comp(A, cr)), lin(A, -qi), r);
            b.add("absorbneg above" + at, lin(comp(cn, A)), lin(A, -q), r);
            b.add("absorbneg below" + at, lin(comp(A, cn)), lin(A, -q), r);
            Diagram cp = tens_all({idv(s), D("capV"), idv(r - s - 2)});
            Diagram cu = tens_all({idv(s), D("cupV"), idv(r - s - 2)});
            b.add("absorbcup cap above" + at, lin(comp(cp, A)), {}, r);
            b.add("absorbcup cup below" + at, lin(comp(A, cu)), {}, r);
        }
        for (int u = 0; u <= r; ++u)
            for (int s = 0; s <= r - u; ++s) {
                Diagram inner = tens_all({idv(u), asym(s), idv(r - u - s)});
                std::string at = " u=" + std::to_string(u) + " s=" + std::to_string(s);
                b.add("asymidem after" + at, lin(comp(inner, A)), lin(A), r);
                b.add("asymidem before" + at, lin(comp(A, inner)), lin(A), r);
            }
        b.add("asymbend",
              lin(seq({tens(nest_cup_v(r), idv(r)), tens_all({idv(r), A, idv(r)}), tens(idv(r), nest_cap_v(r))})),
              lin(A), r);
        b.add("asymbend mirror",
              lin(seq({tens(idv(r), nest_cup_v(r)), tens_all({idv(r), A, idv(r)}), tens(nest_cap_v(r), idv(r))})),
              lin(A), r);
        b.add("eclipse", lin(flip_v(A)), lin(A), r);
        b.add("Deligne", lin(comp(loop_gadget(r, 0), A)), {}, r, "r > 0");
    }
    for (int r = 0; r <= rmax; ++r) {
        Diagram A = asym(r);
        b.add("monkey", lin(right_closure(A)), lin(id(""), monkey_value(N, r)), r);
        if (N >= 1)
            b.add("monkey2", lin(right_closure(A)), lin(id(""), qbinom0(N - 1, r) + qbinom0(N - 1, r - 1)), r,
                  "N >= 1");
    }
    auto trAW = [&](int r) { return right_closure(comp(loop_gadget(r, r), asym(r))); };
    for (int r = 1; r <= rmax; ++r) {
        auto X = [&](int s) {
            return seq({asym(r), tens_all({idv(s - 1), D("cupV"), idv(r - s + 1)}), tens(asym(s), idv(r - s + 2)),
                        loop_gadget(r + 2, r)});
        };
        for (int s = 1; s <= r; ++s) {
            Scalar c1 = (q * k2 + one) * (Scalar::q_pow(1 - s) * k2i - Scalar::q_pow(s - 2)) /
                        (Scalar::q_pow(s) - Scalar::q_pow(-s));
            Lin rhs = lin(trAW(r), c1);
            if (s > 1) {
                Scalar c2 = qint(s - 1) / qint(s) * (Scalar::q_pow(2 * s - 4) * k2 + q) /
                            (Scalar::q_pow(2 * s - 3) * k2 + one);
                rhs = rhs + lin(right_closure(X(s - 1)), c2);
            }
            b.add("pork s=" + std::to_string(s), lin(right_closure(X(s))), rhs, r);
            Scalar cb = (qi * k2i + one) * (Scalar::q_pow(2 - s) - k2) * (Scalar::q_pow(2 - s) + k2) /
                        (qq * (Scalar::q_pow(3 - 2 * s) + k2));
            b.add("burrito s=" + std::to_string(s), lin(right_closure(X(s))), lin(trAW(r), cb), r);
        }
    }
    for (int r = 0; r < rmax; ++r) {
        Scalar c = (q * k2 + one) * (k2i - Scalar::q_pow(2 * r - 2) * k2) / (qq * (Scalar::q_pow(2 * r - 1) * k2 + one));
        Scalar pain = p.dV - Scalar::q_pow(r - 1) * qint(r) * (q * k2 + one) / (Scalar::q_pow(2 * r - 1) * k2 + one);
        b.add("royal", lin(trAW(r + 1)), lin(trAW(r), c), r);
        b.add("pain", lin(trAW(r + 1)), lin(trAW(r), pain), r);
    }
    Diagram B = barbell();
    b.add("trace1", lin(right_closure(B)), {});
    b.add("trace2", lin(right_closure(comp(B, B))), lin(id(""), p.dV * p.dS * p.dS));
}

}  // namespace

Diagram cup_nest(const Word& w) {
    if (w.empty()) return id("");
    char a = w[0];
    return comp(tens_all({idc(a), cup_nest(w.substr(1)), idc(a)}), cup(a));
}

Diagram cap_nest(const Word& w) {
    if (w.empty()) return id("");
    char a = w[0];
    return comp(cap(a), tens_all({idc(a), cap_nest(w.substr(1)), idc(a)}));
}

Diagram right_closure(const Diagram& f) {
    if (f->dom != f->cod) throw TypeError("closure needs an endomorphism, got \"" + f->dom + "\" -> \"" + f->cod + "\"");
    Word rw(f->dom.rbegin(), f->dom.rend());
    return seq({cup_nest(f->dom), tens(f, id(rw)), cap_nest(f->dom)});
}

Diagram left_closure(const Diagram& f) {
    if (f->dom != f->cod) throw TypeError("closure needs an endomorphism, got \"" + f->dom + "\" -> \"" + f->cod + "\"");
    Word rw(f->dom.rbegin(), f->dom.rend());
    return seq({cup_nest(rw), tens(id(rw), f), cap_nest(rw)});
}

Diagram barbell() { return D("id(S)*cupV*id(S) ; mergeSV*mergeVS"); }

Diagram loop_gadget(int a, int b) {
    std::vector<Diagram> layers = {tens(idv(a), D("cupS"))};
    for (int j = a; j >= 1; --j) layers.push_back(tens_all({idv(j - 1), D("mergeVS"), id("S")}));
    for (int k = 0; k < b; ++k) layers.push_back(tens_all({id("S"), D("splitSV"), idv(k)}));
    layers.push_back(tens(D("capS"), idv(b)));
    return seq(layers);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s = {"defining", "derived", "asym", "all"};
    return s;
}

std::vector<RelationPair> relation_suite(const std::string& name, int N, int rmax) {
    std::vector<RelationPair> out;
    if (name == "defining" || name == "all") defining(N, out);
    if (name == "derived" || name == "all") derived(N, out);
    if (name == "asym" || name == "all") asym_suite(N, rmax, out);
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw DomainError("unknown suite '" + name + "' (expected defining, derived, asym or all)");
    return out;
}

}  // namespace qsb
