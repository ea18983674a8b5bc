import json
from pathlib import Path

import pytest

from fracmis.errors import ArgumentError
from fracmis.errors import ExportError
from fracmis.graphs import ExportFormat
from fracmis.graphs import Family
from fracmis.graphs import build
from fracmis.graphs import build_gasket
from fracmis.graphs import build_psw
from fracmis.graphs import export_graph
from fracmis.readers import read_edge_list
from fracmis.transformers import EdgeListTransformer


def test_psw_triangle_edge_list():
  data = export_graph(build_psw(1), ExportFormat.EDGE_LIST)
  assert data == b"# family=psw n=1 vertices=3 edges=3\n0 1\n0 2\n1 2\n"


def test_psw_second_generation_edge_list():
  lines = export_graph(build_psw(2), ExportFormat.EDGE_LIST).decode().splitlines()
  assert lines[0] == "# family=psw n=2 vertices=6 edges=9"
  assert len(lines[1:]) == 9
  assert lines[4] == "0 3"


def test_gasket_json():
  document = json.loads(export_graph(build_gasket(1), ExportFormat.JSON))
  assert document["family"] == "gasket"
  assert document["n"] == 1
  assert document["num_vertices"] == 3
  assert document["boundary"] == [0, 1, 2]
  assert document["birth"] == [1, 1, 1]
  assert document["edges"] == [[0, 1], [0, 2], [1, 2]]


def test_dot_marks_boundary():
  text = export_graph(build_gasket(2), ExportFormat.DOT).decode()
  lines = text.splitlines()
  assert lines[0] == "graph gasket_2 {"
  assert lines[1:4] == ['  0 [role="boundary"];', '  3 [role="boundary"];', '  5 [role="boundary"];']
  assert "  3 -- 4;" in lines
  assert lines[-1] == "}"


@pytest.mark.parametrize("family", [Family.SCALE_FREE_WEB, Family.SIERPINSKI_GASKET], ids=lambda f: f.label)
@pytest.mark.parametrize("n", [1, 3, 6])
def test_edge_list_round_trip(family, n):
  exported = export_graph(build(family, n), ExportFormat.EDGE_LIST)
  document = read_edge_list(exported)
  assert document.family is family
  assert document.generation == n
  assert EdgeListTransformer().transform(document) == exported


def test_export_to_path(tmp_path):
  target = tmp_path / "nested" / "g.edges"
  data = export_graph(build_psw(3), ExportFormat.EDGE_LIST, target)
  assert target.read_bytes() == data
  assert read_edge_list(Path(target)).num_vertices == 15


def test_export_write_failure(tmp_path):
  blocker = tmp_path / "file"
  blocker.write_text("not a directory")
  with pytest.raises(ExportError, match="Could not write"):
    export_graph(build_psw(1), ExportFormat.DOT, blocker / "g.dot")


class TestEdgeListReader:
  def test_malformed_header(self):
    with pytest.raises(ArgumentError, match="header"):
      read_edge_list(b"family=psw\n0 1\n")

  def test_edge_count_mismatch(self):
    with pytest.raises(ArgumentError, match="declares 3 edges"):
      read_edge_list("# family=psw n=1 vertices=3 edges=3\n0 1\n")

  def test_line_with_extra_tokens(self):
    with pytest.raises(ArgumentError, match="Line 2: expected two vertex ids"):
      read_edge_list(b"# family=psw n=1 vertices=3 edges=1\n0 1 2 9\n")

  def test_non_integer_token(self):
    with pytest.raises(ArgumentError, match="Line 3"):
      read_edge_list("# family=psw n=1 vertices=3 edges=2\n0 1\n0 x\n")

  @pytest.mark.parametrize("line", ["0 3", "2 1", "1 1"])
  def test_endpoint_out_of_range(self, line):
    with pytest.raises(ArgumentError, match="needs 0 <= u < v < 3"):
      read_edge_list(f"# family=psw n=1 vertices=3 edges=1\n{line}\n")

  def test_non_ascii_bytes(self):
    with pytest.raises(ArgumentError, match="not ASCII"):
      read_edge_list("# family=psw n=1 vertices=3 edges=1\n0 1é\n".encode())

  def test_unknown_family(self):
    with pytest.raises(ArgumentError, match="Unknown family"):
      read_edge_list("# family=tree n=1 vertices=3 edges=1\n0 1\n")

  def test_valid_lines(self):
    document = read_edge_list("# family=gasket n=1 vertices=3 edges=3\n0 1\n0 2\n1 2\n")
    assert document.family is Family.SIERPINSKI_GASKET
    assert document.edges.tolist() == [[0, 1], [0, 2], [1, 2]]
