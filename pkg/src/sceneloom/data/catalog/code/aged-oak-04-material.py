"""Aged Oak 04 Material generator (Materials)."""

PARAMS = {
    "size": 2.831,
    "detail": 2,
    "roughness": 0.777,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Aged Oak 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
