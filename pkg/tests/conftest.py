import pytest

from hindeval import Corpus, EvalUnit, ResourceSet, Segment, segment
from hindeval.toy import toy_resources

# sentences of the free-word-order permutation example
C1 = "सीता ने अलमारी में रखा हुआ कटा सेब खाया।"
R1 = "अलमारी में रखा कटा हुआ सेब सीता ने खाया।"
R2 = "अलमारी में रखा हुआ कटा सेब सीता ने खाया।"
R4 = "रखा हुआ कटा सेब अलमारी में सीता ने खाया।"


def unit(cand, *refs):
    def seg(x):
        return Segment.from_words(x) if isinstance(x, (list, tuple)) else segment(x)
    return EvalUnit(seg(cand), tuple(seg(r) for r in refs))


@pytest.fixture(scope="session")
def toy():
    return toy_resources()


@pytest.fixture
def empty():
    return ResourceSet()


@pytest.fixture
def permutation_corpus():
    return Corpus.from_texts([C1], [R1], [R2], [R4])


@pytest.fixture
def write_lines(tmp_path):
    def _write(name, lines, newline="\n"):
        p = tmp_path / name
        p.write_bytes("".join(line + newline for line in lines).encode("utf-8"))
        return str(p)
    return _write


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
