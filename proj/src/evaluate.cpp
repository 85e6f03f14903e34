#include "qsb/evaluate.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace qsb {

int normalize_eps(int N, int eps) { return N % 2 ? (eps < 0 ? -1 : 1) : 1; }

long obj_dim(int N, const Word& w) {
    long d = 1;
    long ds = 1L << (N / 2);
    for (char c : w) d *= (c == 'S' ? ds : long(N));
    return d;
}

std::vector<std::string> obj_labels(int N, int eps, const Word& w) {
    if (w.empty()) return {"1"};
    std::vector<std::string> out = {""};
    ModuleSpec V = module_V(N), S = module_S(N, eps);
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto& lab = (w[k] == 'S' ? S : V).labels;
        std::vector<std::string> next;
        next.reserve(out.size() * lab.size());
        for (const auto& a : out)
            for (const auto& b : lab) next.push_back(k == 0 ? b : a + "(x)" + b);
        out = std::move(next);
    }
    return out;
}

namespace {

// Exact images of the primitive generators; zero-dimensional V handled
// without touching the module builders.
SMat<Scalar> primitive_image(int N, int eps, const std::string& g) {
    Params par = qparams(N);
    auto shape = [&](const std::string& name) {
        Word dom = gen_dom(name), cod = gen_cod(name);
        return std::pair<long, long>(obj_dim(N, cod), obj_dim(N, dom));
    };
    auto [rows, cols] = shape(g);
    if (rows == 0 || cols == 0) return SMat<Scalar>(int(rows), int(cols));
    Scalar vscale = Scalar::q_pow(2 - N) + Scalar(1);
    if (g == "capS") return to_sparse(form_S(N).mat);
    if (g == "cupS") return to_sparse(dual_cup(form_S(N)).mat);
    if (g == "capV") return to_sparse(vscale.inv() * form_V(N).mat);
    if (g == "cupV") return to_sparse(vscale * dual_cup(form_V(N)).mat);
    if (g == "xSS") return to_sparse(par.sigmaN * braid(N, eps, 'S', 'S').mat);
    if (g == "xSSi") return to_sparse(par.sigmaN.inv() * braid_inverse(N, eps, 'S', 'S'));
    if (g == "xVV") return to_sparse(braid(N, eps, 'V', 'V').mat);
    if (g == "xVVi") return to_sparse(braid_inverse(N, eps, 'V', 'V'));
    if (g == "xSV") return to_sparse(braid(N, eps, 'S', 'V').mat);
    if (g == "xSVi") return to_sparse(braid_inverse(N, eps, 'V', 'S'));
    if (g == "xVS") return to_sparse(braid(N, eps, 'V', 'S').mat);
    if (g == "xVSi") return to_sparse(braid_inverse(N, eps, 'S', 'V'));
    if (g == "mergeVS") return to_sparse(tau_op(N, eps).mat);
    throw DomainError("no image for generator " + g);
}

// One functor instance over the field K.
template <class K>
class Engine {
public:
    using M = SMat<K>;
    using Conv = std::function<K(const Scalar&)>;

    Engine(int N, int eps, Conv conv) : N_(N), eps_(eps), conv_(std::move(conv)) {}

    const M& gen(const std::string& name) {
        {
            std::lock_guard lk(mu_);
            auto it = gens_.find(name);
            if (it != gens_.end()) return it->second;
        }
        M m = is_primitive(name) ? map_entries<K>(primitive_image(N_, eps_, name), conv_)
                                 : run(parse(derived_expansion(name)));
        std::lock_guard lk(mu_);
        return gens_.emplace(name, std::move(m)).first->second;
    }

    const M& asym(int r, bool flipped, bool barred) {
        auto key = std::make_tuple(r, flipped, barred);
        {
            std::lock_guard lk(mu_);
            auto it = asyms_.find(key);
            if (it != asyms_.end()) return it->second;
        }
        M m = build_asym(r, flipped, barred);
        std::lock_guard lk(mu_);
        return asyms_.emplace(key, std::move(m)).first->second;
    }

    // F(d) applied to the identity of its domain.
    M run(const Diagram& d) {
        long n = obj_dim(N_, d->dom);
        return apply(d, M::identity(int(n)), 1, 1);
    }

    M run(const Lin& l, const Word& dom, const Word& cod) {
        M acc(int(obj_dim(N_, cod)), int(obj_dim(N_, dom)));
        for (const auto& t : l) {
            if (t.d->dom != dom || t.d->cod != cod)
                throw TypeError("linear combination term " + t.d->key + " has type " + t.d->dom + " -> " +
                                t.d->cod + ", expected " + dom + " -> " + cod);
            acc = acc + scale(conv_(t.c), run(t.d));
        }
        return acc;
    }

    const Conv& conv() const { return conv_; }

private:
    int N_, eps_;
    Conv conv_;
    std::mutex mu_;
    std::map<std::string, M> gens_;
    std::map<std::tuple<int, bool, bool>, M> asyms_;

    // (I_l (x) F(d) (x) I_r) * m
    M apply(const Diagram& d, const M& m, long l, long r) {
        switch (d->kind) {
            case NodeKind::Id: return m;
            case NodeKind::Gen: return apply_block(gen(d->gen), m, l, r);
            case NodeKind::Asym: return apply_block(asym(d->r, d->flipped, d->barred), m, l, r);
            case NodeKind::Comp: return apply(d->top, apply(d->bot, m, l, r), l, r);
            case NodeKind::Tens: {
                const Diagram &a = d->top, &b = d->bot;
                M mb = apply(b, m, l * obj_dim(N_, a->dom), r);
                return apply(a, mb, l, obj_dim(N_, b->cod) * r);
            }
        }
        return m;
    }

    M build_asym(int r, bool flipped, bool barred) {
        long dv = N_;
        if (r <= 1) return M::identity(int(r == 0 ? 1 : dv));
        // A_r from A_{r-1}: reflected and barred variants use the reflected
        // and barred generator images with barred coefficients.
        int s = r - 1;
        auto coef = [&](const Scalar& c) { return conv_(barred ? bar_map(c) : c); };
        // Reflection swaps cup and cap and reverses the order of (capV ; cupV).
        auto refl = [&](const char* g) { return std::string(flipped ? to_string(flip_v(qsb::gen(g))) : g); };
        std::string cross = refl(barred ? "xVVi" : "xVV");
        std::string capn = refl(flipped ? "cupV" : "capV"), cupn = refl(flipped ? "capV" : "cupV");
        Params par = qparams(N_);
        Scalar kinv2 = (par.kappa * par.kappa).inv();
        Scalar cr = (Scalar::q_pow(s) - Scalar::q_pow(-s)) / (Scalar(1) + Scalar::q_pow(1 - 2 * s) * kinv2);
        long l = 1;
        for (int k = 0; k < s - 1; ++k) l *= dv;
        M X = apply_block(asym(s, flipped, barred), M::identity(int(l * dv * dv)), 1, dv);
        M YX = apply_block(gen(cross), X, l, 1);
        M ZX = apply_block(gen(cupn), apply_block(gen(capn), X, l, 1), l, 1);
        M XYX = mul(X, YX), XZX = mul(X, ZX);
        M sum = scale(coef(Scalar::q_pow(s)), X) - scale(coef(qint(s)), XYX) - scale(coef(cr), XZX);
        return scale(coef(qint(r).inv()), sum);
    }
};

template <class K>
struct Registry {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<Engine<K>>> engines;
};

Engine<Scalar>& exact_engine(int N, int eps) {
    static Registry<Scalar> reg;
    eps = normalize_eps(N, eps);
    std::string key = std::to_string(N) + ":" + std::to_string(eps);
    std::lock_guard lk(reg.mu);
    auto& e = reg.engines[key];
    if (!e) e = std::make_unique<Engine<Scalar>>(N, eps, [](const Scalar& s) { return s; });
    return *e;
}

Engine<GaussRat>& probe_engine(int N, int eps, const GaussRat& u) {
    static Registry<GaussRat> reg;
    eps = normalize_eps(N, eps);
    std::string key = std::to_string(N) + ":" + std::to_string(eps) + ":" + u.str();
    std::lock_guard lk(reg.mu);
    auto& e = reg.engines[key];
    if (!e) e = std::make_unique<Engine<GaussRat>>(N, eps, [u](const Scalar& s) { return s.eval(u); });
    return *e;
}

}  // namespace

const SMat<Scalar>& generator_matrix(int N, int eps, const std::string& name) {
    return exact_engine(N, eps).gen(name);
}

const SMat<Scalar>& asym_matrix(int N, int eps, int r, bool flipped, bool barred) {
    return exact_engine(N, eps).asym(r, flipped, barred);
}

SMat<Scalar> incarnate(int N, int eps, const Diagram& d) { return exact_engine(N, eps).run(d); }

SMat<Scalar> incarnate(int N, int eps, const Lin& l, const Word& dom, const Word& cod) {
    return exact_engine(N, eps).run(l, dom, cod);
}

SMat<GaussRat> incarnate_probe(int N, int eps, const Diagram& d, const GaussRat& u) {
    return probe_engine(N, eps, u).run(d);
}

SMat<GaussRat> incarnate_probe(int N, int eps, const Lin& l, const Word& dom, const Word& cod, const GaussRat& u) {
    return probe_engine(N, eps, u).run(l, dom, cod);
}

LabeledOp evaluate(int N, int eps, const Diagram& d) {
    eps = normalize_eps(N, eps);
    LabeledOp op;
    op.dom = obj_labels(N, eps, d->dom);
    op.cod = obj_labels(N, eps, d->cod);
    op.mat = to_dense(incarnate(N, eps, d));
    return op;
}

Scalar evaluate_closed(int N, int eps, const Diagram& d) {
    if (!d->dom.empty() || !d->cod.empty()) throw TypeError("not a closed diagram: " + d->dom + " -> " + d->cod);
    return incarnate(N, eps, d).at(0, 0);
}

}  // namespace qsb
