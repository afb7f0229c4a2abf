import logging

import pytest

from fuzzyprod.cli import default_config_path
from fuzzyprod.config import ConfigError, Format, load_config, parse_config

FULL = default_config_path().read_text()


def test_default_file():
    cfg = load_config(default_config_path())
    assert cfg.params.p == 200 and cfg.params.beta10 == 0.5
    assert cfg.params.T == 12 and cfg.params.sigma == 2
    assert cfg.step == 1.0 and cfg.quadrature_n == 1024 and cfg.seed == 42
    assert cfg.grid_sizes == (100, 200, 400) and cfg.format is Format.CSV
    assert cfg.output_path is None


def test_runtime_keys():
    cfg = parse_config(FULL + "step = 0.5\nquadrature_n = 256\nseed = 7\ngrid_sizes = 50, 100\n")
    assert (cfg.step, cfg.quadrature_n, cfg.seed, cfg.grid_sizes) == (0.5, 256, 7, (50, 100))


def test_comments_and_blank_lines():
    cfg = parse_config("\n# header\n" + FULL.replace("p      = 200", "p = 150   # price"))
    assert cfg.params.p == 150


def test_unknown_key_warns():
    with pytest.warns(UserWarning, match="b1"):
        cfg = parse_config(FULL + "b1 = 0.2\n")
    assert cfg.params.b == 0.2


def test_sigma_default_logged(caplog):
    text = "\n".join(l for l in FULL.splitlines() if not l.startswith("sigma"))
    with caplog.at_level(logging.INFO, logger="fuzzyprod.config"):
        cfg = parse_config(text)
    assert cfg.params.sigma == 2.0
    assert "sigma" in caplog.text


def test_zero_beta_rejected():
    with pytest.raises(ConfigError, match="concave"):
        parse_config(FULL.replace("beta10 = 0.5", "beta10 = 0"))


@pytest.mark.parametrize("text, match", [
    (FULL.replace("d3     = 2", ""), "d3"),
    (FULL + "garbage line\n", "key = value"),
    (FULL.replace("p      = 200", "p = lots"), "not a number"),
    (FULL.replace("T      = 12", "T = -1"), "T must be positive"),
    (FULL.replace("p      = 200", "p = inf"), "finite"),
    (FULL + "quadrature_n = 7\n", "quadrature_n"),
    (FULL + "seed = 1.5\n", "integer"),
    (FULL + "step = 0\n", "step"),
])
def test_rejections(text, match):
    with pytest.raises(ConfigError, match=match):
        parse_config(text)
