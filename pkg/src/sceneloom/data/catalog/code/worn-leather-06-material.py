"""Worn Leather 06 Material generator (Materials)."""

PARAMS = {
    "size": 1.014,
    "detail": 5,
    "roughness": 0.257,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
