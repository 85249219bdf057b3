"""Cracked Clay 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.768,
    "detail": 5,
    "roughness": 0.193,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
