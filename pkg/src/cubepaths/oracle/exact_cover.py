"""Dancing links (Algorithm X on a torus of doubly linked nodes).

Columns are edge slots (and vertices, when each must end exactly one path), rows are candidate
paths. Column choice is minimum size with ties going to the leftmost column, and rows
are tried in insertion order, so the search is deterministic.
"""

import time
from typing import Optional, Sequence


class BudgetExceeded(Exception):
    """The search ran out of nodes or time before finishing."""


class Node:
    __slots__ = ["left", "right", "up", "down", "column", "row_id"]

    def __init__(self, column: "ColumnNode" = None, row_id: int = -1):
        self.left = self.right = self.up = self.down = self
        self.column = column
        self.row_id = row_id


class ColumnNode(Node):
    __slots__ = ["size", "name"]

    def __init__(self, name: int = -1):
        super().__init__()
        self.column = self
        self.size = 0
        self.name = name


class DancingLinks:
    """Exact cover matrix.

    :param num_columns: number of columns, all primary.
    """

    def __init__(self, num_columns: int):
        self.header = ColumnNode()
        self.columns = []
        for name in range(num_columns):
            col = ColumnNode(name)
            col.left, col.right = self.header.left, self.header
            self.header.left.right = col
            self.header.left = col
            self.columns.append(col)
        self.num_rows = 0
        self.nodes = 0

    def add_row(self, row_id: int, column_indices: Sequence[int]):
        first = None
        for index in column_indices:
            col = self.columns[index]
            node = Node(col, row_id)
            node.up, node.down = col.up, col
            col.up.down = node
            col.up = node
            col.size += 1
            if first is None:
                first = node
            else:
                node.left, node.right = first.left, first
                first.left.right = node
                first.left = node
        self.num_rows += 1

    def choose_column(self) -> Optional[ColumnNode]:
        best = None
        col = self.header.right
        while col is not self.header:
            if best is None or col.size < best.size:
                best = col
                if best.size == 0:
                    break
            col = col.right
        return best

    @staticmethod
    def cover(col: ColumnNode):
        col.right.left = col.left
        col.left.right = col.right
        row = col.down
        while row is not col:
            node = row.right
            while node is not row:
                node.down.up = node.up
                node.up.down = node.down
                node.column.size -= 1
                node = node.right
            row = row.down

    @staticmethod
    def uncover(col: ColumnNode):
        row = col.up
        while row is not col:
            node = row.left
            while node is not row:
                node.column.size += 1
                node.down.up = node
                node.up.down = node
                node = node.left
            row = row.up
        col.right.left = col
        col.left.right = col

    def solve(self, node_limit: int = None, time_limit: float = None) -> Optional[list[int]]:
        """First exact cover as a list of row ids, or ``None`` when none exists.

        :raises BudgetExceeded: when ``node_limit`` search nodes or ``time_limit`` seconds are used up.
        """
        deadline = None if time_limit is None else time.monotonic() + time_limit
        self.nodes = 0
        chosen = []

        def search() -> bool:
            self.nodes += 1
            if node_limit is not None and self.nodes > node_limit:
                raise BudgetExceeded(f"node limit {node_limit} reached")
            if deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded(f"time limit {time_limit}s reached")
            col = self.choose_column()
            if col is None:
                return True
            if col.size == 0:
                return False
            self.cover(col)
            row = col.down
            while row is not col:
                chosen.append(row.row_id)
                node = row.right
                while node is not row:
                    self.cover(node.column)
                    node = node.right
                if search():
                    return True
                node = row.left
                while node is not row:
                    self.uncover(node.column)
                    node = node.left
                chosen.pop()
                row = row.down
            self.uncover(col)
            return False

        return list(chosen) if search() else None
