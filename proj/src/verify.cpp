#include "sset/verify.hpp"

#include <functional>
#include <sstream>

#include "sset/homology.hpp"
#include "sset/lifting.hpp"
#include "sset/telescope.hpp"

namespace sset {

namespace {

struct Runner {
    std::vector<CheckResult> results;

    void run(const std::string& id, const std::string& description,
             const std::function<bool(std::ostream&)>& body) {
        std::ostringstream detail;
        bool pass;
        try {
            pass = body(detail);
        } catch (const std::exception& e) {
            pass = false;
            detail << "exception: " << e.what();
        }
        results.push_back({id, description, pass, detail.str()});
    }
};

bool entry_small(const CorpusEntry& e, int limit = 20) {
    return e.pres->total_generators() <= limit;
}

std::vector<std::string> one_reduced_names() {
    std::vector<std::string> out;
    for (const auto& e : corpus())
        if (e.has_tag("1-reduced") && entry_small(e)) out.push_back(e.name);
    return out;
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& opts) {
    if (opts.max_dim < 3) throw Error("verify_paper: max_dim must be at least 3");
    const int D = opts.max_dim;
    Runner r;
    PresPtr pt = corpus_entry("delta0").pres;

    r.run("reduce-horn-n1", "collapsing a 1-horn inclusion gives the identity of the point",
          [&](std::ostream& out) {
              bool ok = true;
              for (int k = 0; k <= 1; ++k) {
                  SimplicialMap f = reduce1_map(horn_complex(1, k).inclusion);
                  bool here = f.source().total_generators() == 1 &&
                              f.target().total_generators() == 1 && is_iso(f);
                  if (!here) out << "failed at k=" << k << " ";
                  ok &= here;
              }
              return ok;
          });

    r.run("reduce-horn-n2",
          "collapsing a 2-horn inclusion gives the basepoint inclusion into the 2-sphere",
          [&](std::ostream& out) {
              bool ok = true;
              for (int k = 0; k <= 2; ++k) {
                  SimplicialMap f = reduce1_map(horn_complex(2, k).inclusion);
                  bool here = f.source().total_generators() == 1 &&
                              *f.target_ptr() == *simplicial_sphere(2) &&
                              f.image(0, 0) == f.target().ref(0, f.target().basepoint());
                  if (!here) out << "failed at k=" << k << " ";
                  ok &= here;
              }
              return ok;
          });

    r.run("reduce-horn-n3up",
          "collapsed horn inclusions in dimension >= 3 are monomorphisms with acyclic cone",
          [&](std::ostream& out) {
              bool ok = true;
              for (int n = 3; n <= D; ++n) {
                  for (int k = 0; k <= n; ++k) {
                      SimplicialMap f = reduce1_map(horn_complex(n, k).inclusion);
                      bool here = is_mono(f) && is_local_homology_iso(f, PrimeSet::none()).holds;
                      if (!here) out << "failed at (" << n << "," << k << ") ";
                      ok &= here;
                  }
              }
              return ok;
          });

    r.run("reduction-preserves-mono", "collapsing the 1-skeleton preserves monomorphisms",
          [&](std::ostream& out) {
              bool ok = true;
              int checked = 0;
              for (const auto& m : corpus_maps()) {
                  if (!is_mono(m.map)) continue;
                  ++checked;
                  if (!is_mono(reduce1_map(m.map))) {
                      out << "failed on " << m.name << " ";
                      ok = false;
                  }
              }
              out << checked << " monomorphisms checked";
              return ok;
          });

    r.run("degenerate-face-bound",
          "every degenerate simplex up to dimension 5 has at most 2 non-degenerate faces",
          [&](std::ostream& out) {
              long long seen = 0;
              for (const auto& e : corpus()) {
                  const Presentation& x = *e.pres;
                  for (int n = 1; n <= 5; ++n) {
                      for (const auto& s : x.simplices(n)) {
                          if (!s.degenerate()) continue;
                          ++seen;
                          int nondeg = 0;
                          for (int i = 0; i <= n; ++i)
                              if (!x.face(s, i).degenerate()) ++nondeg;
                          int expected = s.word.size() == 1 ? 2 : 0;
                          if (nondeg > 2 || nondeg != expected) {
                              out << "failed on " << e.name << " at " << x.ref_string(s);
                              return false;
                          }
                      }
                  }
              }
              out << seen << " degenerate simplices checked";
              return true;
          });

    r.run("sphere-endomorphisms", "the simplicial n-sphere has exactly two pointed self-maps",
          [&](std::ostream& out) {
              bool ok = true;
              for (int n = 2; n <= 4; ++n) {
                  size_t count = enumerate_homs(simplicial_sphere(n), simplicial_sphere(n), true).size();
                  if (count != 2) {
                      out << "S^" << n << " has " << count << " self-maps ";
                      ok = false;
                  }
              }
              return ok;
          });

    r.run("sphere-not-kan",
          "the n-sphere fails the Kan condition first at dimension n+1, witnessed by the "
          "all-top-cell horn",
          [&](std::ostream& out) {
              bool ok = true;
              for (int n = 2; n <= 3; ++n) {
                  PresPtr s = simplicial_sphere(n);
                  if (!is_kan_up_to(s, n).kan) {
                      out << "S^" << n << " failed too early ";
                      ok = false;
                      continue;
                  }
                  KanResult k = is_kan_up_to(s, n + 1);
                  bool witness_ok = !k.kan && k.witness && k.witness->n == n + 1;
                  if (witness_ok)
                      for (const auto& im : k.witness->face_images)
                          witness_ok &= !im.degenerate() && im.tdim == n;
                  if (!witness_ok) {
                      out << "S^" << n << " lacks the expected witness ";
                      ok = false;
                  }
              }
              return ok;
          });

    r.run("pathological-fibration",
          "the collapsed 2-horn map lacks the lifting property against itself but has it "
          "against every other collapsed horn",
          [&](std::ostream& out) {
              bool ok = true;
              for (int k = 0; k <= 2; ++k) {
                  SimplicialMap p = reduce1_map(horn_complex(2, k).inclusion);
                  LiftingSquare self{p, p, identity_map(p.source_ptr()),
                                     identity_map(p.target_ptr())};
                  if (solve_lifting(self)) {
                      out << "self-square solvable at k=" << k << " ";
                      ok = false;
                  }
                  if (has_rlp(p, p).holds) {
                      out << "self lifting property at k=" << k << " ";
                      ok = false;
                  }
                  for (int t = 0; t <= 1; ++t)
                      if (!has_rlp(p, reduce1_map(horn_complex(1, t).inclusion)).holds) {
                          out << "failed against collapsed (1," << t << ") ";
                          ok = false;
                      }
                  for (int n = 3; n <= D; ++n)
                      for (int t = 0; t <= n; ++t)
                          if (!has_rlp(p, reduce1_map(horn_complex(n, t).inclusion)).holds) {
                              out << "failed against collapsed (" << n << "," << t << ") ";
                              ok = false;
                          }
              }
              return ok;
          });

    r.run("acyclic-fibration-detector",
          "lifting against a boundary inclusion and against its collapse are the same "
          "problem for maps of 1-reduced complexes",
          [&](std::ostream& out) {
              bool ok = true;
              int squares = 0;
              std::vector<SimplicialMap> maps;
              for (const auto& name : one_reduced_names()) {
                  maps.push_back(constant_map(corpus_entry(name).pres, pt));
                  maps.push_back(identity_map(corpus_entry(name).pres));
              }
              maps.push_back(reduce1_map(horn_complex(2, 0).inclusion));
              for (const auto& f : maps) {
                  for (int n = 0; n <= 3; ++n) {
                      InclusionResult b = boundary_complex(n);
                      bool plain = has_rlp(f, b.inclusion).holds;
                      bool collapsed = has_rlp(f, reduce1_map(b.inclusion)).holds;
                      ++squares;
                      if (plain != collapsed) {
                          out << "disagree at n=" << n << " ";
                          ok = false;
                      }
                  }
              }
              out << squares << " comparisons";
              return ok;
          });

    r.run("fibrancy-detector",
          "bounded Kan checks agree with lifting against the collapsed horns of dimension "
          ">= 3 on 1-reduced complexes",
          [&](std::ostream& out) {
              bool ok = true;
              for (const auto& name : one_reduced_names()) {
                  PresPtr x = corpus_entry(name).pres;
                  bool kan = is_kan_up_to(x, D).kan;
                  bool detector = rlp_against_reduced_horns(constant_map(x, pt), D).holds;
                  if (kan != detector) {
                      out << "disagree on " << name << " ";
                      ok = false;
                  }
              }
              return ok;
          });

    r.run("kan-fibration-litmus",
          "horn lifting problems for maps of 1-reduced complexes transpose across the "
          "collapse, dimension by dimension",
          [&](std::ostream& out) {
              bool ok = true;
              std::vector<SimplicialMap> maps;
              for (const auto& name : one_reduced_names())
                  maps.push_back(constant_map(corpus_entry(name).pres, pt));
              for (int k = 0; k <= 2; ++k)
                  maps.push_back(reduce1_map(horn_complex(2, k).inclusion));
              int compared = 0;
              for (const auto& f : maps) {
                  for (int n = 1; n <= 3; ++n) {
                      for (int k = 0; k <= n; ++k) {
                          bool plain = has_rlp(f, horn_complex(n, k).inclusion).holds;
                          bool collapsed =
                              has_rlp(f, reduce1_map(horn_complex(n, k).inclusion)).holds;
                          ++compared;
                          if (plain != collapsed) {
                              out << "disagree at (" << n << "," << k << ") ";
                              ok = false;
                          }
                      }
                  }
              }
              out << compared << " horn problems";
              return ok;
          });

    r.run("constant-maps-to-sphere",
          "a map from a 1-reduced complex to the 2-sphere is constant exactly when no "
          "2-simplex hits the top cell",
          [&](std::ostream& out) {
              bool ok = true;
              long long maps = 0;
              PresPtr s2 = simplicial_sphere(2);
              for (const auto& name : one_reduced_names()) {
                  PresPtr b = corpus_entry(name).pres;
                  for (const auto& h : enumerate_homs(b, s2, true)) {
                      ++maps;
                      bool hits_top = false;
                      for (int idx = 0; idx < b->count(2); ++idx)
                          hits_top |= !h.image(2, idx).degenerate();
                      bool constant = true;
                      for (int d = 1; d <= b->top_dim(); ++d)
                          for (int idx = 0; idx < b->count(d); ++idx)
                              constant &= h.image(d, idx).degenerate();
                      if (constant != !hits_top) {
                          out << "failed on " << name << " ";
                          ok = false;
                      }
                  }
              }
              out << maps << " maps classified";
              return ok;
          });

    r.run("reduction-adjunction",
          "maps into a 1-reduced complex correspond to maps out of the collapse, by the "
          "explicit mutually inverse factorizations",
          [&](std::ostream& out) {
              bool ok = true;
              long long pairs = 0, maps = 0;
              for (const auto& xe : corpus()) {
                  if (!entry_small(xe)) continue;
                  for (const auto& ye : corpus()) {
                      if (!ye.has_tag("1-reduced") || !entry_small(ye)) continue;
                      ReductionResult red = reduce1(xe.pres);
                      std::vector<SimplicialMap> down = enumerate_homs(xe.pres, ye.pres);
                      std::vector<SimplicialMap> up = enumerate_homs(red.pres, ye.pres);
                      ++pairs;
                      maps += down.size();
                      if (down.size() != up.size()) {
                          out << "count mismatch on (" << xe.name << "," << ye.name << ") ";
                          ok = false;
                          continue;
                      }
                      std::vector<bool> hit(up.size(), false);
                      for (const auto& f : down) {
                          SimplicialMap bar = factor_through_reduction(f);
                          if (!(compose(bar, red.map) == f)) {
                              out << "factorization broke on (" << xe.name << "," << ye.name
                                  << ") ";
                              ok = false;
                              break;
                          }
                          bool found = false;
                          for (size_t i = 0; i < up.size(); ++i) {
                              if (hit[i] || !(up[i].images() == bar.images())) continue;
                              hit[i] = found = true;
                              break;
                          }
                          if (!found) {
                              out << "not a bijection on (" << xe.name << "," << ye.name << ") ";
                              ok = false;
                              break;
                          }
                      }
                  }
              }
              out << pairs << " pairs, " << maps << " maps";
              return ok;
          });

    r.run("eilenberg-adjunction",
          "pointed maps out of a 1-reduced complex correspond to maps into the largest "
          "1-reduced subcomplex, by corestriction",
          [&](std::ostream& out) {
              bool ok = true;
              long long pairs = 0, maps = 0;
              for (const auto& xe : corpus()) {
                  if (!xe.has_tag("1-reduced") || !entry_small(xe)) continue;
                  for (const auto& ye : corpus()) {
                      if (!ye.pres->has_basepoint() || !entry_small(ye, 16)) continue;
                      InclusionResult e1 = eilenberg1(ye.pres);
                      std::vector<SimplicialMap> pointed = enumerate_homs(xe.pres, ye.pres, true);
                      std::vector<SimplicialMap> reduced = enumerate_homs(xe.pres, e1.pres);
                      ++pairs;
                      maps += pointed.size();
                      if (pointed.size() != reduced.size()) {
                          out << "count mismatch on (" << xe.name << "," << ye.name << ") ";
                          ok = false;
                          continue;
                      }
                      std::vector<bool> hit(reduced.size(), false);
                      for (const auto& f : pointed) {
                          SimplicialMap hat = factor_through_eilenberg(f);
                          if (!(compose(e1.inclusion, hat) == f)) {
                              out << "corestriction broke on (" << xe.name << "," << ye.name
                                  << ") ";
                              ok = false;
                              break;
                          }
                          bool found = false;
                          for (size_t i = 0; i < reduced.size(); ++i) {
                              if (hit[i] || !(reduced[i].images() == hat.images())) continue;
                              hit[i] = found = true;
                              break;
                          }
                          if (!found) {
                              out << "not a bijection on (" << xe.name << "," << ye.name << ") ";
                              ok = false;
                              break;
                          }
                      }
                  }
              }
              out << pairs << " pairs, " << maps << " maps";
              return ok;
          });

    r.run("smash-one-reduced", "smashing a 1-reduced complex with a pointed complex stays 1-reduced",
          [&](std::ostream& out) {
              bool ok = true;
              int count = 0;
              for (const auto& xe : corpus()) {
                  if (!xe.has_tag("1-reduced") || !entry_small(xe, 8)) continue;
                  for (const auto& ze : corpus()) {
                      if (!ze.pres->has_basepoint() || !entry_small(ze, 8)) continue;
                      SmashResult sm = smash(xe.pres, ze.pres);
                      ++count;
                      if (!is_one_reduced(*sm.pres) || !sm.pres->validate().ok()) {
                          out << "failed on (" << xe.name << "," << ze.name << ") ";
                          ok = false;
                      }
                  }
              }
              out << count << " smash products";
              return ok;
          });

    r.run("sphere-homology", "spheres have free rank one in degrees 0 and n and nothing else",
          [&](std::ostream& out) {
              bool ok = true;
              for (int n = 2; n <= 4; ++n) {
                  std::vector<FGAbGroup> h = homology_Z(*simplicial_sphere(n));
                  bool here = static_cast<int>(h.size()) == n + 1 && h[0] == FGAbGroup{1, {}} &&
                              h[n] == FGAbGroup{1, {}};
                  for (int i = 1; i < n; ++i) here &= h[i].trivial();
                  if (!here) {
                      out << "S^" << n << " ";
                      ok = false;
                  }
              }
              return ok;
          });

    r.run("projective-plane-separation",
          "the projective plane collapses rationally in homology while its fundamental "
          "group keeps the 2-torsion",
          [&](std::ostream& out) {
              PresPtr rp2 = rp2_model();
              std::vector<FGAbGroup> h = homology_Z(*rp2);
              bool hz = h.size() == 3 && h[0] == FGAbGroup{1, {}} &&
                        h[1] == FGAbGroup{0, {Int(2)}} && h[2].trivial();
              if (!hz) out << "integral homology off ";
              LocalIsoReport rational =
                  is_local_homology_iso(constant_map(rp2, pt), PrimeSet::rationals());
              if (!rational.holds) out << "not a rational homology isomorphism ";
              FGAbGroup pi1ab = abelianization(pi1_presentation(*rp2));
              bool ab = pi1ab == FGAbGroup{0, {Int(2)}};
              if (!ab) out << "abelianized fundamental group is " << pi1ab.to_string() << " ";
              bool h1match = pi1ab == h[1];
              return hz && rational.holds && ab && h1match;
          });

    r.run("telescope-laws",
          "telescope stages keep the sphere's homology, multiply inclusion degrees, and "
          "localize exactly at the multiplier primes",
          [&](std::ostream& out) {
              bool ok = true;
              std::vector<std::vector<long long>> seqs = {{},        {2},       {3},
                                                          {5},       {2, 3},    {2, 2},
                                                          {3, 5},    {2, 3, 5}, {5, 3, 2},
                                                          {2, 2, 2, 2}, {2, 3, 5, 2}};
              std::vector<PrimeSet> sets = {PrimeSet::none(),
                                            PrimeSet::from_multiplicative_set({2}),
                                            PrimeSet::from_multiplicative_set({2, 3}),
                                            PrimeSet::from_multiplicative_set({3, 5}),
                                            PrimeSet::from_multiplicative_set({2, 3, 5}),
                                            PrimeSet::rationals()};
              int stages = 0;
              for (int n = 2; n <= 3; ++n) {
                  for (const auto& ms : seqs) {
                      for (int k = 0; k <= static_cast<int>(ms.size()); ++k) {
                          TelescopeStage st = telescope_stage(n, ms, k);
                          ++stages;
                          std::vector<FGAbGroup> h = homology(st.complex);
                          bool here = h[0] == FGAbGroup{1, {}} && h[n] == FGAbGroup{1, {}} &&
                                      h[n + 1].trivial();
                          for (int d = 1; d < n; ++d) here &= h[d].trivial();
                          Int expect = 1;
                          for (int j = 0; j < k; ++j) expect *= ms[j];
                          here &= inclusion_degree(st) == expect;
                          if (k >= 1) {
                              TelescopeStage prev = telescope_stage(n, ms, k - 1);
                              stage_inclusion_map(prev, st).check_commutes();
                              here &= inclusion_degree(st) ==
                                      inclusion_degree(prev) * Int(ms[k - 1]);
                          }
                          for (const auto& ps : sets) {
                              bool all_in = true;
                              for (int j = 0; j < k; ++j)
                                  for (const auto& [prime, e] : factorize(Int(ms[j]))) {
                                      (void)e;
                                      all_in &= ps.contains(prime);
                                  }
                              StageInclusionReport rep = stage_inclusion_is_local_iso(st, ps);
                              here &= rep.is_local_iso == all_in;
                              here &= rep.multipliers_invertible == all_in;
                          }
                          if (!here) {
                              out << "failed at n=" << n << " k=" << k << " ";
                              ok = false;
                          }
                      }
                  }
              }
              out << stages << " stages";
              return ok;
          });

    r.run("skeleton-and-reduction-landmarks",
          "the 1-skeleton of the 2-simplex is its boundary and its collapse is the 2-sphere",
          [&](std::ostream&) {
              bool a = *skeleton1(share(standard_simplex(2))).pres == *boundary_complex(2).pres;
              bool b = *reduce1(share(standard_simplex(2))).pres == *simplicial_sphere(2);
              PresPtr s3 = simplicial_sphere(3);
              bool c = *reduce1(s3).pres == *s3;
              return a && b && c;
          });

    r.run("euler-betti", "the Euler characteristic equals the alternating rational Betti sum",
          [&](std::ostream& out) {
              bool ok = true;
              for (const auto& e : corpus()) {
                  long long chi = euler_characteristic(*e.pres);
                  long long betti = 0;
                  std::vector<FGAbGroup> h = homology_Z(*e.pres);
                  for (size_t n = 0; n < h.size(); ++n)
                      betti += (n % 2 == 0 ? 1 : -1) * h[n].rank;
                  if (chi != betti) {
                      out << "failed on " << e.name << " ";
                      ok = false;
                  }
              }
              return ok;
          });

    return r.results;
}

}  // namespace sset
