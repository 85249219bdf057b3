"""Polished Marble 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.61,
    "detail": 5,
    "roughness": 0.925,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
