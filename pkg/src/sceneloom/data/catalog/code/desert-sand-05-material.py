"""Desert Sand 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.665,
    "detail": 1,
    "roughness": 0.47,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
