"""Worn Leather 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.986,
    "detail": 3,
    "roughness": 0.488,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
