import json

import pytest

from ndagg.core import NDimInterval, Permutation, ValidationError, WeightingVector
from ndagg.mcgdm import (DecisionProblem, build_collective, check_domination,
                         check_increasingness, check_indexation_insensitivity, load_fixture,
                         permute_problem, problem_from_csv, random_problem, rank,
                         run_pipeline, sensitivity)
from ndagg.orders import LexOrder
from ndagg.sampling import Sampler

from paperdata import (COLLECTIVE, OMEGA, PRINTED_S2, PRINTED_S4, RANKING_PRINTED,
                       RANKING_RECOMPUTED, SCORES, TAU, collective_exact, fr, frs,
                       lex_key_exact, scores_exact, to_floats)

REF_ORDER = LexOrder(Permutation(TAU))


class TestCollective:
    def test_reference_matrix_exactly(self, paper_problem):
        got = build_collective(paper_problem)
        for i in range(5):
            for j in range(4):
                expected = tuple(float(v) for v in COLLECTIVE[i][j])
                assert got.entries[i][j].components == expected, (i, j)

    def test_reference_matrix_exact_oracle(self):
        oracle = collective_exact()
        for i in range(5):
            for j in range(4):
                assert oracle[i][j] == frs(COLLECTIVE[i][j]), (i, j)

    def test_single_expert_passthrough(self):
        problem = DecisionProblem.from_json({
            "alternatives": ["a"], "criteria": ["c1", "c2"], "experts": ["e"],
            "evaluations": [[[0.4, 0.9]]],
        }, require_pipeline=False)
        got = build_collective(problem)
        assert got.entries[0][0].components == (0.4,)
        assert got.entries[0][1].components == (0.9,)

    def test_constant_cube_gives_degenerate_cells(self):
        problem = DecisionProblem.from_json({
            "alternatives": ["a", "b"], "criteria": ["c1", "c2"], "experts": ["e1", "e2"],
            "evaluations": [[[0.3, 0.3], [0.3, 0.3]], [[0.3, 0.3], [0.3, 0.3]]],
        }, require_pipeline=False)
        got = build_collective(problem)
        assert all(cell.components == (0.3, 0.3) for row in got.entries for cell in row)

    def test_expert_permutation_leaves_it_bitwise_identical(self, paper_problem):
        base = build_collective(paper_problem)
        shuffled = permute_problem(paper_problem, Permutation((5, 3, 1, 2, 4)),
                                   Permutation.identity(5), Permutation.identity(4))
        again = build_collective(shuffled)
        assert base.entries == again.entries


class TestScores:
    def test_exact_oracle_matches_expected_strings(self):
        for (name, expected), got in zip(SCORES.items(), scores_exact()):
            assert got == frs(expected), name

    def test_float_pipeline_within_1e12(self, paper_problem):
        result = run_pipeline(paper_problem)
        for label, score in zip(paper_problem.alternatives, result.scores):
            for g, e in zip(score, frs(SCORES[label])):
                assert abs(g - float(e)) < 1e-12, label

    def test_transcription_slips_reproduce_from_corrupted_intermediates(self):
        # the circulated a_2 slot 3 uses 0.2474*0.8 where 0.2474*0.6 belongs
        assert fr("0.07023") + fr("0.19792") + fr("0.15905") + fr("0.08016") == fr("0.50736")
        assert fr("0.07023") + fr("0.14844") + fr("0.15905") + fr("0.08016") == fr("0.45788")
        # the circulated a_4 slots 1-2 garble the first two slots of two products
        assert fr("0.07023") + fr("0.03181") + fr("0.06362") + fr("0.12024") == fr("0.2859")
        assert fr("0.07023") + fr("0.04948") + fr("0.03181") + fr("0.12024") == fr("0.27176")
        assert fr("0.09364") + fr("0.03181") + fr("0.06362") + fr("0.12024") == fr("0.30931")
        assert fr("0.09364") + fr("0.09896") + fr("0.03181") + fr("0.12024") == fr("0.34465")

    def test_recomputed_and_printed_differ_only_in_known_slots(self):
        assert frs(SCORES["a_2"])[2] != frs(PRINTED_S2)[2]
        assert frs(SCORES["a_2"])[:2] == frs(PRINTED_S2)[:2]
        assert frs(SCORES["a_4"])[:2] != frs(PRINTED_S4)[:2]
        assert frs(SCORES["a_4"])[2:] == frs(PRINTED_S4)[2:]


class TestRanking:
    def test_recomputed_scores_rank(self, paper_problem):
        result = run_pipeline(paper_problem)
        assert result.ranking.to_json(paper_problem.alternatives)["worst_to_best"] == \
            RANKING_RECOMPUTED

    def test_printed_scores_fixture_ranks_the_published_way(self):
        scores = {name: NDimInterval(to_floats(frs(vals))) for name, vals in SCORES.items()}
        scores["a_2"] = NDimInterval(to_floats(frs(PRINTED_S2)))
        scores["a_4"] = NDimInterval(to_floats(frs(PRINTED_S4)))
        labels = list(scores)
        ranking = rank([scores[k] for k in labels], REF_ORDER)
        assert [labels[i] for i in ranking.worst_to_best] == RANKING_PRINTED

    def test_against_independent_key_sort(self, paper_problem):
        # brute-force comparator: materialize the scan-order key and let
        # tuple comparison decide
        result = run_pipeline(paper_problem)
        exact = scores_exact()
        labels = paper_problem.alternatives
        expected = [labels[i] for i in
                    sorted(range(5), key=lambda i: lex_key_exact(TAU, exact[i]))]
        assert result.ranking.to_json(labels)["worst_to_best"] == expected

    def test_all_equal_scores_single_tie_group(self):
        x = NDimInterval((0.2, 0.4))
        ranking = rank([x, x, x], LexOrder(Permutation.identity(2)))
        assert ranking.groups == [[0, 1, 2]]

    def test_annotation_only_on_the_bundled_example(self, paper_problem):
        assert any("reference example" in a for a in run_pipeline(paper_problem).annotations)
        tweaked = paper_problem.replace_cell(1, 1, 1, 0.45)
        assert not any("reference example" in a for a in run_pipeline(tweaked).annotations)


class TestValidation:
    def test_bad_weight_sum_names_the_invariant(self, paper_problem):
        doc = paper_problem.to_json()
        doc["weights"] = [0.5, 0.2, 0.1, 0.1]
        with pytest.raises(ValidationError, match="sum"):
            DecisionProblem.from_json(doc)

    def test_zero_weight_rejected_for_ranking(self, paper_problem):
        doc = paper_problem.to_json()
        doc["weights"] = [0.0, 0.4, 0.3, 0.3]
        with pytest.raises(ValidationError, match="strictly positive"):
            DecisionProblem.from_json(doc)

    def test_ragged_cube_names_the_path(self, paper_problem):
        doc = paper_problem.to_json()
        del doc["evaluations"][2][1][3]
        with pytest.raises(ValidationError, match=r"evaluations\[2\]\[1\]"):
            DecisionProblem.from_json(doc)

    def test_out_of_range_cell_names_the_path(self, paper_problem):
        doc = paper_problem.to_json()
        doc["evaluations"][1][0][2] = 1.5
        with pytest.raises(ValidationError, match=r"evaluations\[1\]\[0\]\[2\]"):
            DecisionProblem.from_json(doc)

    def test_order_dimension_must_match_experts(self, paper_problem):
        doc = paper_problem.to_json()
        doc["order"] = {"kind": "LexTau", "tau": [1, 2, 3]}
        with pytest.raises(ValidationError, match="dimension"):
            DecisionProblem.from_json(doc)

    def test_hash_is_stable(self, paper_problem):
        again = DecisionProblem.from_json(paper_problem.to_json())
        assert paper_problem.canonical_hash() == again.canonical_hash()


class TestPrinciples:
    def test_increasingness_on_reference(self, paper_problem):
        report = check_increasingness(paper_problem, trials=20, seed=31)
        assert report.holds, report.to_json()

    def test_reference_bump_keeps_the_top_spot(self, paper_problem):
        bumped = paper_problem.replace_cell(2, 4, 3, 0.9)
        result = run_pipeline(bumped)
        assert result.ranking.to_json(paper_problem.alternatives)["best_to_worst"][0] == "a_4"

    def test_domination_on_reference(self, paper_problem):
        report = check_domination(paper_problem, trials=20, seed=31)
        assert report.holds, report.to_json()

    def test_indexation_insensitivity_on_reference(self, paper_problem):
        report = check_indexation_insensitivity(paper_problem, trials=20, seed=31)
        assert report.holds, report.to_json()

    @pytest.mark.parametrize("aggregator", ["ndimWeightedAverage", "ndimOWA"])
    def test_principles_on_random_problems(self, aggregator):
        sampler = Sampler(77)
        for _ in range(5):
            problem = random_problem(sampler, p=sampler.randint(2, 4),
                                     m=sampler.randint(2, 4), n=sampler.randint(2, 4),
                                     aggregator=aggregator)
            assert check_increasingness(problem, trials=5, seed=5).holds
            assert check_domination(problem, trials=5, seed=5).holds
            assert check_indexation_insensitivity(problem, trials=5, seed=5).holds


class TestSensitivity:
    def test_reference_edit_reshuffles_the_ranking(self, paper_problem):
        diff = sensitivity(paper_problem, [{"kind": "cell", "expert": 2, "alt": 4,
                                            "crit": 3, "value": 0.1}])
        assert diff["baseline"]["ranking"]["worst_to_best"] == RANKING_RECOMPUTED
        assert diff["edited"]["ranking"]["worst_to_best"] == ["a_4", "a_2", "a_1", "a_3", "a_5"]
        assert diff["flipped_pairs"]
        # the touched alternative's third component drops
        a4 = diff["score_deltas"][3]
        assert a4[2] < -0.2
        # the edited collective cell re-sorts with the lowered grade
        assert abs(diff["edited"]["scores"][3][2] - 0.45496) < 1e-12

    def test_empty_edit_list_is_a_no_op(self, paper_problem):
        diff = sensitivity(paper_problem, [])
        assert diff["baseline"]["scores"] == diff["edited"]["scores"]
        assert diff["flipped_pairs"] == []

    def test_weight_edit(self, paper_problem):
        diff = sensitivity(paper_problem, [{"kind": "weights",
                                            "weights": [0.25, 0.25, 0.25, 0.25]}])
        assert diff["baseline"]["scores"] != diff["edited"]["scores"]

    def test_malformed_edit(self, paper_problem):
        with pytest.raises(ValidationError):
            sensitivity(paper_problem, [{"kind": "cell", "expert": 2}])


class TestCsvIngestion:
    def test_round_trip(self, tmp_path, paper_problem):
        paths = []
        for k in range(paper_problem.n):
            lines = ["alt," + ",".join(paper_problem.criteria)]
            for i, label in enumerate(paper_problem.alternatives):
                row = ",".join(str(v) for v in paper_problem.evaluations[k][i])
                lines.append(f"{label},{row}")
            path = tmp_path / f"expert_{k + 1}.csv"
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
            paths.append(str(path))
        problem = problem_from_csv(paths, paper_problem.weights,
                                   paper_problem.order_spec, paper_problem.aggregator_spec,
                                   expert_labels=paper_problem.experts)
        assert problem.evaluations == paper_problem.evaluations
        assert problem.canonical_hash() == paper_problem.canonical_hash()

    def test_label_mismatch_rejected(self, tmp_path):
        (tmp_path / "e1.csv").write_text("alt,C1\na,0.5\n", encoding="utf-8")
        (tmp_path / "e2.csv").write_text("alt,C2\na,0.5\n", encoding="utf-8")
        with pytest.raises(ValidationError):
            problem_from_csv([str(tmp_path / "e1.csv"), str(tmp_path / "e2.csv")],
                             None, None, None)
