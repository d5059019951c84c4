#include "fusionkit/axioms.hpp"

#include "fusionkit/parallel.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace fusionkit {

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw FusionError(ErrorKind::InvalidParam, "no axiom check named " + name);
}

namespace {

class Checker {
public:
    Checker(std::string name) { check_.name = std::move(name); }

    template <class F>
    void expect(bool ok, F&& describe) {
        ++check_.probes;
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.witness = describe();
        }
    }
    AxiomCheck done() { return std::move(check_); }

private:
    AxiomCheck check_;
};

std::string render_map(const FusionRing& ring, const ProductMap& m) {
    std::string s = "{";
    bool first = true;
    for (const auto& [label, n] : m) {
        s += (first ? "" : ", ") + ring.render(label) + ":" + n.str();
        first = false;
    }
    return s + "}";
}

/// Products for the associativity scan. Pairs inside the window come from a dense table of memoized
/// results; pairs leaving it go to the rules directly so the scan does not flood the ring's cache.
class TripleProducts {
public:
    TripleProducts(const FusionRing& ring, const TruncationWindow& window)
        : ring_(ring), window_(window), n_(window.size()), table_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                table_[i * n_ + j] = &ring.product(window.labels()[i], window.labels()[j]);
            }
        }
    }

    const ProductMap& operator()(const Label& a, const Label& b, ProductMap& scratch) const {
        const auto i = window_.index_of(a);
        const auto j = window_.index_of(b);
        if (i && j) {
            return *table_[*i * n_ + *j];
        }
        scratch = ring_.rules().product(a, b);
        return scratch;
    }

private:
    const FusionRing& ring_;
    const TruncationWindow& window_;
    std::size_t n_;
    std::vector<const ProductMap*> table_;
};

ProductMap times_right(const TripleProducts& products, const ProductMap& left, const Label& z) {
    ProductMap out;
    ProductMap scratch;
    for (const auto& [a, n] : left) {
        for (const auto& [b, m] : products(a, z, scratch)) {
            out[b] += n * m;
        }
    }
    return out;
}

ProductMap times_left(const TripleProducts& products, const Label& x, const ProductMap& right) {
    ProductMap out;
    ProductMap scratch;
    for (const auto& [a, n] : right) {
        for (const auto& [b, m] : products(x, a, scratch)) {
            out[b] += n * m;
        }
    }
    return out;
}

}  // namespace

AxiomReport verify_axioms(const FusionRing& ring, const TruncationWindow& window) {
    if (!window.ring().same_ring(ring)) {
        throw FusionError(ErrorKind::RingMismatch, "window belongs to a different ring");
    }
    if (window.size() == 0 || !window.contains(ring.unit())) {
        throw FusionError(ErrorKind::InvalidParam, "axiom window must contain the unit");
    }

    const auto& W = window.labels();
    const Label& e = ring.unit();
    auto r = [&](const Label& l) { return ring.render(l); };

    AxiomReport report;
    report.ring = ring.description();
    for (const auto& l : W) {
        report.window.push_back(r(l));
    }

    Checker unit("unit_law");
    Checker involution("involution");
    Checker dimension("dimension_symmetry");
    Checker integrality("nonnegative_integral");
    Checker anti("anti_multiplicative");
    Checker frobenius("frobenius_reciprocity");
    Checker multiplicative("dimension_multiplicativity");
    Checker bound("dimension_bound");

    bool conj_total = ring.is_valid(ring.conjugate(e));
    involution.expect(ring.conjugate(e) == e, [&] { return "conj(e) = " + r(ring.conjugate(e)); });

    for (const auto& x : W) {
        const ProductMap expected{{x, Integer(1)}};
        unit.expect(ring.product(e, x) == expected,
                    [&] { return "e*" + r(x) + " = " + render_map(ring, ring.product(e, x)); });
        unit.expect(ring.product(x, e) == expected,
                    [&] { return r(x) + "*e = " + render_map(ring, ring.product(x, e)); });

        const Label cx = ring.conjugate(x);
        const bool valid = ring.is_valid(cx);
        involution.expect(valid, [&] { return "conj(" + r(x) + ") is not a basis label"; });
        if (!valid) {
            conj_total = false;
            continue;
        }
        involution.expect(ring.conjugate(cx) == x,
                          [&] { return "conj(conj(" + r(x) + ")) = " + r(ring.conjugate(cx)); });
        const Quantity& dx = ring.dim(x);
        dimension.expect(dx == ring.dim(cx) && !(dx < Quantity(1) - Quantity::approximate(kTolerance)),
                         [&] { return "d(" + r(x) + ") = " + dx.str() + ", d(conj " + r(x) + ") = " + ring.dim(cx).str(); });
    }

    for (const auto& x : W) {
        for (const auto& y : W) {
            const ProductMap& xy = ring.product(x, y);
            const Quantity dxdy = ring.dim(x) * ring.dim(y);
            Quantity total;
            for (const auto& [a, n] : xy) {
                integrality.expect(n > 0, [&] {
                    return "N_{" + r(x) + "," + r(y) + "}^" + r(a) + " = " + n.str();
                });
                if (!ring.is_valid(a)) {
                    integrality.expect(false, [&] { return r(x) + "*" + r(y) + " yields a non-basis label"; });
                    continue;
                }
                total += Quantity::exact(n) * ring.dim(a);
                bound.expect(!(ring.dim(a) * ring.dim(y) < ring.dim(x)), [&] {
                    return "N_{" + r(x) + "," + r(y) + "}^" + r(a) + " > 0 but d(" + r(a) + ")d(" + r(y) +
                           ") < d(" + r(x) + ")";
                });
            }
            multiplicative.expect(total == dxdy, [&] {
                return "sum_a N_{" + r(x) + "," + r(y) + "}^a d(a) = " + total.str() + " != " + dxdy.str();
            });

            if (!conj_total) {
                continue;
            }
            const Label cx = ring.conjugate(x);
            const Label cy = ring.conjugate(y);

            ProductMap conj_xy;
            for (const auto& [a, n] : xy) {
                conj_xy[ring.conjugate(a)] += n;
            }
            anti.expect(conj_xy == ring.product(cy, cx), [&] {
                return "conj(" + r(x) + "*" + r(y) + ") = " + render_map(ring, conj_xy) + " but conj(" + r(y) +
                       ")*conj(" + r(x) + ") = " + render_map(ring, ring.product(cy, cx));
            });

            // Each nonzero coefficient of the three index patterns is compared with the other two;
            // together this covers every triple in the window without an O(|W|^3) scan.
            auto compare = [&](const Label& a, const Label& b, const Label& c) {
                const Integer n1 = ring.coefficient(a, b, c);
                const Integer n2 = ring.coefficient(ring.conjugate(a), c, b);
                const Integer n3 = ring.coefficient(c, ring.conjugate(b), a);
                frobenius.expect(n1 == n2 && n2 == n3, [&] {
                    return "(" + r(a) + ", " + r(b) + ", " + r(c) + "): N_{a,b}^c = " + n1.str() +
                           ", N_{conj a,c}^b = " + n2.str() + ", N_{c,conj b}^a = " + n3.str();
                });
            };
            for (const auto& [a, n] : xy) {
                compare(x, y, a);
            }
            // x plays conj(a) and y plays c: nonzero N_{conj a,c}^b with b in the window
            for (const auto& [b, n] : xy) {
                if (window.contains(b)) {
                    compare(cx, b, y);
                }
            }
            // x plays c and y plays conj(b): nonzero N_{c,conj b}^a with a in the window
            for (const auto& [a, n] : xy) {
                if (window.contains(a)) {
                    compare(a, cy, x);
                }
            }
        }
    }

    // Associativity runs one checker per left factor, merged in window order.
    const TripleProducts products(ring, window);
    std::vector<AxiomCheck> per_x(W.size());
    parallel_for(
        W.size(),
        [&](std::size_t begin, std::size_t end) {
            ProductMap scratch_xy;
            ProductMap scratch_yz;
            for (std::size_t i = begin; i < end; ++i) {
                Checker assoc("associativity");
                const Label& x = W[i];
                for (const auto& y : W) {
                    const ProductMap& xy = products(x, y, scratch_xy);
                    for (const auto& z : W) {
                        const ProductMap left = times_right(products, xy, z);
                        const ProductMap right = times_left(products, x, products(y, z, scratch_yz));
                        assoc.expect(left == right, [&] {
                            return "(" + r(x) + "*" + r(y) + ")*" + r(z) + " = " + render_map(ring, left) + " but " +
                                   r(x) + "*(" + r(y) + "*" + r(z) + ") = " + render_map(ring, right);
                        });
                    }
                }
                per_x[i] = assoc.done();
            }
        },
        1);
    AxiomCheck associativity{"associativity", true, 0, {}};
    for (auto& c : per_x) {
        associativity.probes += c.probes;
        if (!c.passed && associativity.passed) {
            associativity.passed = false;
            associativity.witness = std::move(c.witness);
        }
    }

    for (auto* c : {&unit, &involution, &dimension, &integrality, &anti, &frobenius, &multiplicative}) {
        report.checks.push_back(c->done());
    }
    report.checks.push_back(std::move(associativity));
    report.checks.push_back(bound.done());
    return report;
}

}  // namespace fusionkit
