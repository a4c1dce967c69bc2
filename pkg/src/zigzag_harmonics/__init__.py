"""Exact arithmetic on the zigzag graph and its harmonic functions."""

from .paintbox import (IntervalTuple, Paintbox, eval_F, eval_F_coproduct,
                       eval_F_maxblock, phi_w, template_of_intervals,
                       template_of_paintbox)
from .qsym import monomial_expansion, pieri_check, product_F
from .semifinite import (EPS, ApproxReport, EpsPoly, ExtValue, GrowthModel,
                         LimitReport, build_w_eps, check_approx_sequence,
                         check_harmonic_at, check_limit_formula,
                         check_ring_identity, eps_expansion, model_paintbox,
                         phi_tw, section_interval_tuples)
from .templates import (Cluster, FlangeDecomposition, Template,
                        flange_and_sections, inject, inject_all,
                        is_finite_template, is_semifinite_template,
                        maxblock_member, member, member_J,
                        minimal_maxblock_word, parse_template,
                        reduced_templates, single_generator_word)
from .words import (EMPTY, MINUS, PLUS, ROOT, BinaryWord, FormalCombination,
                    composition_of_word, dim, dominates_at, dominates_search,
                    enumerate_level, expand, is_subword, level, lower_covers,
                    parse_vertex, upper_covers, word_of_composition)

__version__ = "0.1.0"
