import pytest

from hybridsumm.config import PipelineConfig, load_config, parse_models
from hybridsumm.exceptions import ResourceError
from hybridsumm.ranking import Budget


class TestParseModels:
    def test_names(self):
        assert parse_models("jaccard, TextRank,tfidf") == ("jaccard", "textrank", "tfidf")

    def test_table_letters(self):
        assert parse_models("A,B,F") == ("jaccard", "cosine", "textrank", "embedding")

    def test_dedup(self):
        assert parse_models("jaccard,A") == ("jaccard", "cosine")


class TestPipelineConfig:
    def test_defaults(self):
        cfg = PipelineConfig()
        assert cfg.models == ("jaccard", "textrank", "tfidf")
        assert cfg.budget == Budget.chars(665)

    @pytest.mark.parametrize("kw", [
        {"models": ()}, {"models": ("bogus",)}, {"models": ("jaccard", "jaccard")}, {"rank": "best"},
        {"k": 2, "chars": 10}, {"k": 0}, {"low_df": 0.3, "high_df": 0.2}, {"textrank_d": 1.0}, {"jobs": 0},
        {"tfidf_position": "middle"}, {"f1_granularity": "word"},
    ])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            PipelineConfig(**kw)

    def test_budgets(self):
        assert PipelineConfig(k=3).budget == Budget.sentences(3)
        assert PipelineConfig(words=100).budget == Budget.words(100)
        assert PipelineConfig(k=3).with_budget(chars=50).budget == Budget.chars(50)

    def test_update_coerces_strings(self):
        cfg = PipelineConfig().update({"textrank.d": "0.9", "dice_classic": "true", "k": "4", "models": "C"})
        assert cfg.textrank_d == 0.9 and cfg.dice_classic is True and cfg.k == 4
        assert cfg.models == ("tfidf",)

    def test_update_budget_replaces_other_budget(self):
        assert PipelineConfig(k=3).update({"words": 50}).budget == Budget.words(50)

    def test_unknown_key(self):
        with pytest.raises(ValueError, match="unknown config key"):
            PipelineConfig().update({"colour": "blue"})

    def test_bad_bool(self):
        with pytest.raises(ValueError):
            PipelineConfig().update({"rouge.stem": "maybe"})


class TestResources:
    def test_missing_path(self):
        with pytest.raises(ResourceError, match="--vectors"):
            PipelineConfig(models=("glove",)).check_resources()

    def test_missing_file(self, tmp_path):
        with pytest.raises(ResourceError, match="not found"):
            PipelineConfig(models=("wordnet",), lexicon=str(tmp_path / "x.lex")).check_resources()

    def test_statistical_models_need_nothing(self):
        PipelineConfig(models=("jaccard", "cosine", "textrank", "tfidf")).check_resources()


class TestLoadConfig:
    def test_tables_and_relative_paths(self, tmp_path):
        (tmp_path / "v.txt").write_text("a 1 2\n")
        path = tmp_path / "c.toml"
        path.write_text('models = "glove,textrank"\nvectors = "v.txt"\nk = 2\n'
                        '[textrank]\nd = 0.8\n[ensemble]\nf1 = "unigram"\n')
        cfg = load_config(path)
        assert cfg.models == ("glove", "textrank")
        assert cfg.vectors == str(tmp_path / "v.txt")
        assert cfg.textrank_d == 0.8 and cfg.f1_granularity == "unigram" and cfg.k == 2
        cfg.check_resources()

    def test_dotted_keys(self, tmp_path):
        path = tmp_path / "c.toml"
        path.write_text('"tfidf.position" = "off"\n')
        assert load_config(path).tfidf_position == "off"

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "c.toml"
        path.write_text('rank = "nope"\n')
        with pytest.raises(ValueError):
            load_config(path)
