"""Slate Shard generator (Rocks)."""

PARAMS = {
    "size": 1.078,
    "detail": 4,
    "roughness": 0.185,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Slate Shard"
    for key, value in params.items():
        node[key] = value
    return node
