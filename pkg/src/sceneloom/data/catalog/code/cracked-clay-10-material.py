"""Cracked Clay 10 Material generator (Materials)."""

PARAMS = {
    "size": 3.921,
    "detail": 4,
    "roughness": 0.213,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
