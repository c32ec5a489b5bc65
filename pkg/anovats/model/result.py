"""The `anovats.model.result` module contains the result records of the test and the post-hoc procedure."""

__all__ = ["TestResult", "ClusterNode", "TraceEntry", "ClusterResult", "format_number"]

import json
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

__pdoc__ = {
    "TestResult.model_computed_fields": False,
    "TestResult.model_config": False,
    "TestResult.model_fields": False,
    "ClusterNode.model_config": False,
    "ClusterNode.model_fields": False,
    "ClusterResult.model_config": False,
    "ClusterResult.model_fields": False,
}


def format_number(value: float) -> str:
    """Format a number with 6 significant digits for human-readable output."""
    return f"{value:.6g}"


class TestResult(BaseModel):
    """Outcome of one homogeneity test."""

    __test__ = False  # not a pytest test class

    model_config = ConfigDict(frozen=True)

    statistic: float = Field(ge=0)
    """The full-sample statistic T_n."""
    b: int
    """The effective block length."""
    p_value: float = Field(ge=0, le=1)
    alpha: float = Field(gt=0, lt=1)
    reject: bool
    group_means: list[list[float]]
    """The (a, p) matrix of group sample means."""
    subsample_stats: list[float]
    """The n - b + 1 subsample statistics, in window order."""
    grand_mean: list[float] = []
    labels: list[str] = []

    @model_validator(mode="after")
    def validate_decision(self) -> "TestResult":
        """Validate that the decision matches the p-value."""
        if self.reject != (self.p_value < self.alpha):
            raise ValueError("reject must equal p_value < alpha")
        return self

    @computed_field
    @property
    def num_subsamples(self) -> int:
        """The number of subsample statistics, n - b + 1."""
        return len(self.subsample_stats)

    def to_json(self, indent: Optional[int] = 2) -> str:
        """Return the JSON representation with full float precision."""
        return json.dumps(self.model_dump(mode="json", exclude={"num_subsamples"}), indent=indent)

    def summary(self) -> str:
        """Return a one-line human summary."""
        decision = "reject" if self.reject else "do not reject"
        return (
            f"T_n={format_number(self.statistic)} b={self.b} p={format_number(self.p_value)} "
            f"alpha={format_number(self.alpha)}: {decision} homogeneity"
        )


class ClusterNode(BaseModel):
    """A node of the post-hoc clustering tree.

    Members are sorted ascending by sample mean. Children exist only for rejected nodes with at
    least two members; the left child holds the first ``split_index`` members.

    """

    members: list[str]
    sample_means: list[float]
    p_value: Optional[float] = None
    """Absent for single-member nodes, which are not tested."""
    split_index: Optional[int] = None
    children: Optional[tuple["ClusterNode", "ClusterNode"]] = None

    @property
    def is_leaf(self) -> bool:
        """Whether the node is a final group."""
        return self.children is None

    def leaves(self) -> list["ClusterNode"]:
        """Return the leaves below this node, left to right."""
        if self.children is None:
            return [self]
        left, right = self.children
        return left.leaves() + right.leaves()

    def render(self, depth: int = 0) -> list[str]:
        """Render the subtree as indented text lines."""
        members = ", ".join(self.members)
        if self.p_value is None:
            line = f"{'  ' * depth}{{{members}}}"
        else:
            line = f"{'  ' * depth}{{{members}}} p={format_number(self.p_value)}"
        if self.split_index is not None:
            line += f" split after {self.members[self.split_index - 1]}"
        lines = [line]
        if self.children is not None:
            for child in self.children:
                lines.extend(child.render(depth + 1))
        return lines


class TraceEntry(BaseModel):
    """One test performed by the post-hoc procedure, in visit order."""

    members: list[str]
    p_value: float
    alpha: float
    reject: bool
    depth: int


class ClusterResult(BaseModel):
    """Outcome of the recursive post-hoc procedure."""

    root: ClusterNode
    final_groups: list[list[str]]
    group_means: list[float]
    """The pooled sample mean of each final group."""
    alpha: Optional[float]
    """The constant significance level, or None when a schedule was used."""
    trace: list[TraceEntry]

    @model_validator(mode="after")
    def validate_partition(self) -> "ClusterResult":
        """Validate that the final groups partition the root members."""
        flat = [label for group in self.final_groups for label in group]
        if sorted(flat) != sorted(self.root.members) or len(set(flat)) != len(flat):
            raise ValueError("final_groups must partition the input areas")
        return self

    def to_json(self, indent: Optional[int] = 2) -> str:
        """Return the JSON representation with full float precision."""
        return json.dumps(self.model_dump(mode="json"), indent=indent)

    def to_text(self) -> str:
        """Return the tree, the trace and the final groups as text."""
        lines = ["Tree:"]
        lines.extend(f"  {line}" for line in self.root.render())
        lines.append("Trace:")
        for step, entry in enumerate(self.trace, start=1):
            decision = "reject" if entry.reject else "accept"
            lines.append(
                f"  {step}. {{{', '.join(entry.members)}}} p={format_number(entry.p_value)} "
                f"alpha={format_number(entry.alpha)} {decision}"
            )
        lines.append("Final groups:")
        for group, mean in zip(self.final_groups, self.group_means):
            lines.append(f"  ({', '.join(group)}) mean={format_number(mean)}")
        return "\n".join(lines)


ClusterNode.model_rebuild()
