"""Disjoint sets."""
from shelflab.unionfind import DisjointSet


def test_union_and_find():
    classes: DisjointSet[str] = DisjointSet()
    for item in "abcde":
        classes.make_set(item)
    assert classes.union("a", "b")
    assert classes.union("c", "d")
    assert classes.union("b", "d")
    assert not classes.union("a", "c")
    assert classes.find("a") == classes.find("d")
    assert classes.find("e") == "e"
    assert len(classes) == 5


def test_find_adds_new_items():
    classes: DisjointSet[int] = DisjointSet()
    assert 7 not in classes
    assert classes.find(7) == 7
    assert 7 in classes


def test_classes_in_insertion_order():
    classes: DisjointSet[int] = DisjointSet()
    for item in range(6):
        classes.make_set(item)
    classes.union(4, 0)
    classes.union(5, 1)
    classes.union(1, 3)
    assert sorted(sorted(members) for members in classes.classes()) == [
        [0, 4], [1, 3, 5], [2],
    ]
    assert [members[0] for members in classes.classes()] == [0, 1, 2]


def test_long_chains_compress():
    classes: DisjointSet[int] = DisjointSet()
    for item in range(1000):
        classes.union(item, item + 1)
    root = classes.find(0)
    assert all(classes.find(item) == root for item in range(1001))
