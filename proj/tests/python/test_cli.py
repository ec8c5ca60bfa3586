import os
import subprocess

import pytest

CLI = os.environ.get("ILLUMCOVER_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ILLUMCOVER_CLI not set")


def run(*args, stdin=None, expect=0):
    proc = subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True
    )
    assert proc.returncode == expect, (proc.returncode, proc.stdout, proc.stderr)
    return proc.stdout


def test_construct_verify_pipe():
    cover = run("cover", "construct", "--n", "2", "--m", "2")
    assert cover.splitlines()[0] == "n=2 eps=1/2 mode=exact"
    out = run("cover", "verify", "--file", "-", stdin=cover)
    assert out.startswith("covered")


def test_boltyanski_martini_rejection():
    lines = ["n=2 eps=1/2 mode=exact"]
    for k in range(7):
        lines.append(f"{k % 3}/3,{k % 7}/7")
    out = run("cover", "verify", "--file", "-", stdin="\n".join(lines) + "\n", expect=1)
    assert out.startswith("uncovered")


def test_polydisc_ill_output():
    assert run("polydisc", "ill", "--n", "5") == "classical=63 fractional=32\n"


def test_cover_table():
    out = run("cover", "table", "--dim", "2", "--eps-list", "1/2,0.45")
    rows = out.strip().splitlines()
    assert rows[0] == "eps,lower_bound,exact,source"
    assert rows[1] == "1/2,7,7,formula"
    assert rows[2] == "0.45,7,7,formula"


def test_cover_search_and_plot(tmp_path):
    cov = tmp_path / "c.cov"
    svg = tmp_path / "c.svg"
    out = run("cover", "search", "--n", "1", "--eps", "1/2", "--grid", "6",
              "--out", str(cov))
    assert out == ""
    text = cov.read_text()
    assert "# size=3" in text
    run("cover", "construct", "--n", "2", "--m", "2", "--out", str(cov))
    run("cover", "plot", "--file", str(cov), "--out", str(svg))
    assert svg.read_text().startswith("<svg")
    # determinism: replot byte-for-byte
    first = svg.read_bytes()
    run("cover", "plot", "--file", str(cov), "--out", str(svg))
    assert svg.read_bytes() == first


def test_frac_csv():
    out = run("frac", "lp", "--n", "1", "--eps", "1/2", "--k", "4")
    rows = out.strip().splitlines()
    assert rows[0] == "n,eps,closed_form,lp_value,gap"
    assert rows[1] == "1,1/2,2/1,2/1,0/1"


def test_zonotope_flow(tmp_path):
    gens = tmp_path / "gens.txt"
    dirs = tmp_path / "dirs.txt"
    gens.write_text("field=complex n=2\n1+0i,0+0i\n0+0i,1+0i\n0+1i,0+1i\n")
    reduced = run("zonotope", "reduce", "--file", str(gens))
    assert reduced.splitlines()[0] == "field=complex n=2 lambda=1,1,1"
    run("zonotope", "illuminate", "--file", str(gens), "--out", str(dirs))
    out = run("zonotope", "verify", "--file", str(gens), "--dirs", str(dirs),
              "--q", "12")
    assert out.startswith("pass")


def test_real_zonotope_flow(tmp_path):
    gens = tmp_path / "hexagon.txt"
    dirs = tmp_path / "dirs.txt"
    gens.write_text("field=real n=2\n1,0\n0,1\n1,1\n")
    reduced = run("zonotope", "reduce", "--file", str(gens))
    assert reduced.splitlines()[0] == "field=real n=2 lambda=1,1,1"
    run("zonotope", "illuminate", "--file", str(gens), "--out", str(dirs))
    assert len(dirs.read_text().strip().splitlines()) == 1 + 3  # header + Y
    out = run("zonotope", "verify", "--file", str(gens), "--dirs", str(dirs))
    assert out.startswith("pass candidates=8")

    cgens = tmp_path / "cgens.txt"
    cgens.write_text("field=complex n=2\n1+0i,0+0i\n0+0i,1+0i\n1+0i,1+0i\n")
    frac = run("zonotope", "illuminate", "--file", str(cgens), "--fractional")
    assert "total_mass=3" in frac


def test_zonoid_flow(tmp_path):
    atoms = tmp_path / "atoms.txt"
    clusters = tmp_path / "clusters.txt"
    atoms.write_text(
        "n=2 kind=atoms\n2,1+0i,0+0i\n1,0+0i,1+0i\n"
        "3,0.70710678118654757+0i,0+0.70710678118654757i\n"
    )
    clusters.write_text("clusters=3\n0: 0\n1: 1\n2: 2\n")
    out = run("zonoid", "support", "--file", str(atoms), "--theta", "1+0i,0+0i")
    assert abs(float(out) - 4.1213203435596428) < 1e-12
    out = run("zonoid", "extract", "--file", str(atoms), "--clusters",
              str(clusters), "--delta", "0.01")
    assert "within_delta=1" in out


def test_exit_codes(tmp_path):
    run("cover", "bogus", expect=64)
    run("cover", "verify", "--file", str(tmp_path / "missing.cov"), expect=74)
    boundary = "n=1 eps=0.4 mode=float margin=1e-9\n0\n0.3\n0.6\n"
    run("cover", "verify", "--file", "-", stdin=boundary, expect=2)


def test_lightsource_report():
    out = run("polydisc", "lightsource", "--n", "3", "--r", "2")
    assert "exact=40" in out
