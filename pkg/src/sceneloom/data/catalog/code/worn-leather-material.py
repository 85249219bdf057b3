"""Worn Leather Material generator (Materials)."""

PARAMS = {
    "size": 1.342,
    "detail": 4,
    "roughness": 0.287,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather Material"
    for key, value in params.items():
        node[key] = value
    return node
